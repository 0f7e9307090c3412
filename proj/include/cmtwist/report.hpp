#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmtwist/cmpoints.hpp"
#include "cmtwist/deform.hpp"
#include "cmtwist/families.hpp"
#include "cmtwist/ideal.hpp"

namespace cmtwist {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

struct ReportEntry {
  std::string section;
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Per-case row of the catalog table.
struct CaseRow {
  std::string label;
  bool kernel_match = false;
  std::string hp_curve;
  std::string hp_image;
  std::optional<long> dim_BA;
  bool lemma36 = false;
  bool singular_at_p = false;
  bool pass = false;
};

struct ReportDocument {
  std::string field;
  std::vector<CaseRow> cases;
  std::vector<ReportEntry> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }

  /// `timestamp` is the only field allowed to differ between runs.
  nlohmann::ordered_json to_json(const std::optional<std::string>& timestamp = std::nullopt) const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["tool"] = "cmtwist";
    j["version"] = kToolVersion;
    j["field"] = field;
    if (timestamp) j["timestamp"] = *timestamp;
    j["overall"] = pass();
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
      nlohmann::ordered_json r;
      r["case"] = c.label;
      r["kernel_match"] = c.kernel_match;
      r["hp_curve"] = c.hp_curve;
      r["hp_image"] = c.hp_image;
      r["dim_BA"] = c.dim_BA ? nlohmann::ordered_json(*c.dim_BA) : nlohmann::ordered_json(nullptr);
      r["lemma36"] = c.lemma36;
      r["singular_at_p"] = c.singular_at_p;
      j["cases"].push_back(std::move(r));
    }
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"section", c.section}, {"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return j;
  }
};

template <Scalar K>
struct ReportOptions {
  /// Replaces the built-in catalog, e.g. to inject a corrupted generator.
  std::function<CMPoint<K>(CaseLabel)> catalog;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <Scalar K>
void catalog_section(ReportDocument& doc, const K& proto, const ReportOptions<K>& opt) {
  std::vector<VerificationReport> reports;
  for (CaseLabel c : all_cases()) {
    CMPoint<K> pt = opt.catalog ? opt.catalog(c) : catalog_case(c, proto);
    pt.label = c;
    VerificationReport v = verify_cm_point(pt);
    CaseRow row;
    row.label = roman(c);
    row.kernel_match = v.check_passed("kernel_match");
    row.hp_curve = v.hp_curve;
    row.hp_image = v.hp_image;
    row.dim_BA = v.dim_BA;
    row.lemma36 = v.check_passed("lemma36");
    row.singular_at_p = v.check_passed("singular_at_p");
    row.pass = v.passed();
    doc.cases.push_back(row);
    for (const auto& ch : v.checks)
      if (ch.name != "lemma36" && ch.name != "dim_BA") doc.checks.push_back({"catalog", roman(c) + " " + ch.name, ch.pass, ch.witness});
    reports.push_back(std::move(v));
  }
  // the extension data B/A of each case, listed after the whole catalog
  for (std::size_t i = 0; i < reports.size(); ++i)
    for (const char* name : {"lemma36", "dim_BA"})
      if (const Check* ch = reports[i].find(name))
        doc.checks.push_back({"extension", roman(all_cases()[i]) + " " + name, ch->pass, ch->witness});
}

template <Scalar K>
void chart_section(ReportDocument& doc, const K& proto) {
  for (CaseLabel c : {CaseLabel::IV, CaseLabel::VI, CaseLabel::VII, CaseLabel::VIII, CaseLabel::IX}) {
    ChartMatch m = extension_matches_chart(extension_ring(c, proto), c);
    std::string counts;
    for (long n : m.presentation_counts) counts += std::to_string(n) + " ";
    doc.checks.push_back({"charts", roman(c) + " presentation matches w-chart", m.isomorphic,
                          "ideals equal: " + yes_no(m.ideals_equal) + "; filtered counts " + counts});
  }
}

template <Scalar K>
void family_section(ReportDocument& doc, const K& proto) {
  doc.checks.push_back({"family", "y*f1 - x*f2 = t*q over Q(t)", syzygy_identity_check(), "expanded to 0"});
  doc.checks.push_back({"family", "y*f1 - x*f2 = t*q over " + proto.field_name() + "[t]",
                        syzygy_identity_check_over(proto), "expanded to 0"});

  ParametricIdeal Z = nodal_family_ideal();
  Ideal<Rational> Z0 = fiber_at(Z, Rational(0));
  auto S = Z0.ring();
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), w = var(S, "w");
  auto q = x.pow(3) + x * x * w - y * y * w;
  Ideal<Rational> expected_fiber(S, {x * z, y * z, z * z, q});
  doc.checks.push_back({"family", "fiber at t = 0", Z0 == expected_fiber, Z0.to_string()});
  Ideal<Rational> sat = saturate(Z0, Ideal<Rational>(S, {x, y, z}));
  doc.checks.push_back({"family", "saturation of the t = 0 fiber at the embedded point", sat == Ideal<Rational>(S, {z, q}),
                        sat.to_string() + "; fiber differs: " + yes_no(!(sat == Z0))});
  FlatnessReport fl = flatness_probe(Z, {Rational(0), Rational(1), Rational(-2)});
  std::string w_hp = "generic " + fl.generic_hp;
  for (const auto& [c, hp] : fl.sample_hp) w_hp += "; t=" + c.to_string() + ": " + hp;
  doc.checks.push_back({"family", "flatness probe", fl.pass && fl.generic_hp == "3*t + 1", w_hp});
}

inline void specialization_section(ReportDocument& doc) {
  ParametricIdeal P = double_line_family();
  auto S = plane_ring(QT());
  ParametricIdeal img = generic_image(P, standard_projection(S, P.ideal.ring()));
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  auto t = Polynomial<QT>::constant(S, QT::t());
  bool generic_ok = img.ideal == Ideal<QT>(S, {z, x.pow(3) + t * x * x * y});
  doc.checks.push_back({"specialization", "generic image", generic_ok, img.ideal.to_string()});
  Ideal<Rational> special = fiber_at(img, Rational(0));
  auto R = special.ring();
  bool special_ok = special == Ideal<Rational>(R, {var(R, "z"), var(R, "x").pow(3)});
  doc.checks.push_back({"specialization", "image at t = 0", special_ok, special.to_string()});
  // p = [0:0:0:1] lies on both the double line and the line, hence VIII
  CaseLabel at1 = classify_fiber(P, Rational(1)), at0 = classify_fiber(P, Rational(0));
  doc.checks.push_back({"specialization", "classification at t = 1", at1 == CaseLabel::VIII, roman(at1)});
  doc.checks.push_back({"specialization", "classification at t = 0", at0 == CaseLabel::IX, roman(at0)});
  for (const auto& r : degeneration_chart_check()) {
    bool self_loop = r.detail.rfind("self-loop", 0) == 0;
    std::string labels;
    for (const auto& [c, l] : r.fiber_labels) labels += " t=" + c.to_string() + ":" + l;
    doc.checks.push_back({"specialization", "degeneration " + r.name + (r.documented ? " (reference)" : " (constructed)"),
                          self_loop ? !r.confirmed : r.confirmed, r.detail + ";" + labels});
  }
}

template <Scalar K>
void resolution_section(ReportDocument& doc, const K& proto) {
  for (CaseLabel c : all_cases()) {
    auto T = curve_ring(proto);
    Ideal<K> I(T, catalog_curve_generators(c, T));
    doc.checks.push_back({"resolution", roman(c) + " resolution shape", resolution_check(I), "3 quadrics, 2 linear syzygies"});
    RegularityReport r = regularity_check(I);
    std::string vals;
    for (std::size_t t = 1; t < r.values.size(); ++t) vals += (t > 1 ? "," : "") + std::to_string(r.values[t]);
    doc.checks.push_back({"resolution", roman(c) + " Hilbert function", r.pass, "HF(1..8) = " + vals});
  }
}

template <Scalar K>
void deformation_section(ReportDocument& doc, const K& proto) {
  for (CaseLabel c : all_cases()) {
    auto T = curve_ring(proto);
    DeformationBasis<K> db = embedded_deformations(Ideal<K>(T, catalog_curve_generators(c, T)));
    doc.checks.push_back({"deform", roman(c) + " embedded deformations", db.dimension() == 12,
                          "dimension " + std::to_string(db.dimension())});
  }
  TangentReport<K> tr = cm_tangent_triple_line(proto);
  doc.checks.push_back({"tangent", "reference family inside the solution space", tr.family_contained && tr.third_generator_forced,
                        "contained: " + yes_no(tr.family_contained) + "; p3 forced: " + yes_no(tr.third_generator_forced)});
  bool dims = tr.raw_count == 28 && tr.action_rank == 16 && tr.quotient_dimension == 12;
  doc.checks.push_back({"tangent", "dimensions", dims,
                        "raw " + std::to_string(tr.raw_count) + ", rank " + std::to_string(tr.action_rank) + ", quotient " +
                            std::to_string(tr.quotient_dimension) +
                            "; linear reparametrizations only, so the quotient is an upper bound, exact once the "
                            "component is known to have dimension 12"});
  std::string failing;
  for (const auto& f : tr.listed_functionals)
    if (!f.invariant) failing += (failing.empty() ? "" : ", ") + f.name;
  std::string repairs;
  for (const auto& [from, to] : tr.repairs) repairs += "; " + from + " -> " + to + " spans";
  doc.checks.push_back({"tangent", "listed functionals span the invariant space", tr.listed_span_matches,
                        "rank " + std::to_string(tr.listed_rank) + (failing.empty() ? "" : "; not invariant: " + failing) + repairs});
}

} // namespace detail

/// Runs every check in a fixed order. Failures are entries, not exceptions.
template <Scalar K>
ReportDocument run_report(const K& proto, const ReportOptions<K>& opt = {}) {
  ReportDocument doc;
  doc.field = proto.field_name();
  auto guarded = [&](const std::string& section, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      doc.checks.push_back({section, "aborted", false, e.what()});
    }
  };
  guarded("catalog", [&] { detail::catalog_section(doc, proto, opt); });
  guarded("charts", [&] { detail::chart_section(doc, proto); });
  guarded("family", [&] { detail::family_section(doc, proto); });
  guarded("specialization", [&] { detail::specialization_section(doc); });
  guarded("resolution", [&] { detail::resolution_section(doc, proto); });
  guarded("deform", [&] { detail::deformation_section(doc, proto); });
  return doc;
}

} // namespace cmtwist
