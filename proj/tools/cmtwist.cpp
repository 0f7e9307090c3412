// Command-line front end: cmtwist <subcommand> [options].
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;
using json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string order = "grevlex";
  std::string field;  // empty: take the field from the file header (Q when no file)
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Reads a document; --field replaces the coefficient field of every header.
RawDocument load(const std::string& path, const Globals& g) {
  RawDocument doc = split_document(read_file(path));
  if (!g.field.empty()) {
    FieldSpec f = FieldSpec::parse(g.field);
    for (auto& h : doc.headers) h.field = f;
  }
  return doc;
}

FieldSpec field_or_default(const Globals& g) { return g.field.empty() ? FieldSpec{} : FieldSpec::parse(g.field); }

template <Scalar K>
json polys_json(const std::vector<Polynomial<K>>& ps, const MonomialOrder& ord) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string(ord));
  return a;
}

std::string str(const json& j) { return j.get<std::string>(); }

std::string timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::ostringstream os;
  os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int cmd_groebner(const std::string& file, const Globals& g) {
  RawDocument doc = load(file, g);
  MonomialOrder ord = MonomialOrder::parse(g.order);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    auto d = parse_ideal_document(doc, proto);
    const auto& gb = d.ideal.basis(ord);
    if (g.json) {
      std::cout << json{{"ring", d.header.to_string()}, {"order", ord.name()}, {"basis", polys_json(gb.elements(), ord)}}.dump(2)
                << "\n";
    } else {
      for (const auto& p : gb.elements()) std::cout << p.to_string(ord) << "\n";
    }
    return 0;
  });
}

int cmd_image(const std::string& map_file, const Globals& g) {
  RawDocument doc = load(map_file, g);
  MonomialOrder ord = MonomialOrder::parse(g.order);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    auto m = parse_map_document(doc, proto);
    auto kernel = reduced(ring_map_kernel(m.map, m.target_ideal()), ord);
    if (g.json) {
      std::cout << json{{"ring", m.source_header.to_string()}, {"kernel", polys_json(kernel.generators(), ord)}}.dump(2) << "\n";
    } else {
      for (const auto& p : kernel.generators()) std::cout << p.to_string(ord) << "\n";
    }
    return 0;
  });
}

int cmd_hilbert(const std::string& file, const Globals& g) {
  RawDocument doc = load(file, g);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    auto d = parse_ideal_document(doc, proto);
    HilbertData hd = hilbert_series(d.ideal, MonomialOrder::parse(g.order));
    std::optional<DegreeGenus> dg;
    try {
      dg = degree_genus(hd);
    } catch (const NotACurve&) {
    }
    if (g.json) {
      json j{{"hp", hd.polynomial.to_string()}, {"regularity_index", hd.regularity_index}};
      j["degree"] = dg ? json(dg->degree.to_string()) : json(nullptr);
      j["genus"] = dg ? json(dg->genus.to_string()) : json(nullptr);
      json num = json::array(), hf = json::array();
      for (const auto& c : hd.numerator) num.push_back(c.get_str());
      for (long t = 0; t <= 8; ++t) hf.push_back(hd.function(t).get_str());
      j["numerator"] = num;
      j["hf"] = hf;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "HP = " << hd.polynomial.to_string();
      if (dg) std::cout << " ; degree " << dg->degree.to_string() << " ; genus " << dg->genus.to_string();
      std::cout << " ; regularity <=" << hd.regularity_index << "\n";
    }
    return 0;
  });
}

int cmd_classify(const std::string& file, const std::string& point, bool construct, const Globals& g) {
  RawDocument doc = load(file, g);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    using K = decltype(proto);
    auto d = parse_ideal_document(doc, proto);
    auto pc = PlaneCubic<K>::from_ideal(d.ideal, parse_point(point, proto));
    auto cls = classify_plane_cubic(pc);
    json j{{"label", roman(cls.label)}, {"name", case_name(cls.label)}, {"note", cls.note}};
    if (construct) {
      CMPoint<K> pt = cm_point_for(pc);
      j["curve"] = polys_json(pt.curve.generators(), MonomialOrder::grevlex());
      json ims = json::object();
      for (std::size_t i = 0; i < pt.map.images().size(); ++i) ims[pt.map.source()->name(i)] = pt.map.images()[i].to_string();
      j["map"] = ims;
    }
    if (g.json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << roman(cls.label) << " (" << case_name(cls.label) << ")";
      if (!cls.note.empty()) std::cout << " ; " << cls.note;
      std::cout << "\n";
      if (construct) {
        std::cout << "curve:";
        for (const auto& s : j["curve"]) std::cout << " " << str(s) << ";";
        std::cout << "\nmap:";
        for (const auto& [k, v] : j["map"].items()) std::cout << " " << k << " -> " << str(v) << ";";
        std::cout << "\n";
      }
    }
    return 0;
  });
}

int cmd_deform_file(const std::string& file, const Globals& g) {
  RawDocument doc = load(file, g);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    auto d = parse_ideal_document(doc, proto);
    auto db = embedded_deformations(d.ideal);
    json basis = json::array();
    for (const auto& h : db.basis) basis.push_back(polys_json(h, MonomialOrder::grevlex()));
    if (g.json) {
      std::cout << json{{"dimension", db.dimension()}, {"syzygies", db.syzygies.syzygies.size()}, {"basis", basis}}.dump(2) << "\n";
    } else {
      std::cout << "dimension " << db.dimension() << "\n";
      for (const auto& h : basis) {
        std::cout << "(";
        for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? ", " : "") << str(h[i]);
        std::cout << ")\n";
      }
    }
    return 0;
  });
}

int cmd_tangent(const Globals& g) {
  return with_field(field_or_default(g), [&](auto proto) {
    auto tr = cm_tangent_triple_line(proto);
    json fs = json::array();
    for (const auto& f : tr.listed_functionals) fs.push_back({{"functional", f.name}, {"invariant", f.invariant}});
    json inv = json::array();
    for (const auto& v : tr.invariant_basis) inv.push_back(detail::functional_string(v));
    json rep = json::array();
    for (const auto& [from, to] : tr.repairs) rep.push_back({{"printed", from}, {"replacement", to}});
    if (g.json) {
      std::cout << json{{"raw", tr.raw_count},
                        {"action_rank", tr.action_rank},
                        {"quotient", tr.quotient_dimension},
                        {"deformation_dimension", tr.deformation_dimension},
                        {"family_contained", tr.family_contained},
                        {"third_generator_forced", tr.third_generator_forced},
                        {"invariant_basis", inv},
                        {"printed_functionals", fs},
                        {"printed_span_matches", tr.listed_span_matches},
                        {"repairs", rep}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "raw " << tr.raw_count << " ; action rank " << tr.action_rank << " ; quotient " << tr.quotient_dimension << "\n";
      std::cout << "invariant functionals:\n";
      for (const auto& s : inv) std::cout << "  " << str(s) << "\n";
      std::cout << "printed functionals:\n";
      for (const auto& f : tr.listed_functionals) std::cout << "  " << f.name << (f.invariant ? "  invariant" : "  NOT invariant") << "\n";
      std::cout << "printed list spans: " << (tr.listed_span_matches ? "yes" : "no") << "\n";
      for (const auto& [from, to] : tr.repairs) std::cout << "  replacing " << from << " by " << to << " restores the span\n";
    }
    return 0;
  });
}

ParametricIdeal load_family(const std::string& file, const std::string& builtin) {
  if (!builtin.empty()) {
    if (builtin == "nodal") return nodal_family_ideal();
    if (builtin == "double-line") return double_line_family();
    if (builtin == "jump") return jumping_family();
    throw Error("BadArgument", "unknown family '" + builtin + "' (nodal, double-line, jump)");
  }
  if (file.empty()) throw Error("BadArgument", "give a Q(t) ideal file or --builtin");
  return ParametricIdeal(parse_ideal_text(read_file(file), RationalFunction(1)).ideal);
}

std::vector<Rational> parse_samples(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& c : parse_point(s, Rational(1))) out.push_back(c);
  return out;
}

int cmd_family_fiber(const std::string& file, const std::string& builtin, const std::string& at, const Globals& g) {
  ParametricIdeal P = load_family(file, builtin);
  Ideal<Rational> F = fiber_at(P, parse_point(at, Rational(1)).at(0));
  if (g.json) std::cout << json{{"fiber", polys_json(F.generators(), MonomialOrder::grevlex())}}.dump(2) << "\n";
  else std::cout << print_ideal(F);
  return 0;
}

int cmd_family_image(const std::string& file, const std::string& builtin, const Globals& g) {
  std::optional<ParametricIdeal> img;
  if (!builtin.empty() || file.empty()) {
    if (builtin != "double-line" && !builtin.empty()) throw Error("BadArgument", "family image needs a curve family with a map (double-line)");
    ParametricIdeal P = double_line_family();
    img = generic_image(P, standard_projection(plane_ring(RationalFunction(1)), P.ideal.ring()));
  } else {
    auto m = parse_map_text(read_file(file), RationalFunction(1));
    img = generic_image(ParametricIdeal(m.target_ideal()), m.map);
  }
  json ex = json::array();
  for (const auto& e : img->exclusions) ex.push_back(e.to_string());
  if (g.json) {
    std::cout << json{{"image", polys_json(img->ideal.generators(), MonomialOrder::grevlex())}, {"exclusions", ex}}.dump(2) << "\n";
  } else {
    std::cout << print_ideal(img->ideal);
    std::cout << "# excluded t:";
    for (const auto& e : img->exclusions) std::cout << " " << e.to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_family_probe(const std::string& file, const std::string& builtin, const std::string& samples, const Globals& g) {
  ParametricIdeal P = load_family(file, builtin);
  FlatnessReport r = flatness_probe(P, parse_samples(samples));
  if (g.json) {
    json s = json::array();
    for (const auto& [c, hp] : r.sample_hp) s.push_back({{"t", c.to_string()}, {"hp", hp}});
    std::cout << json{{"generic_hp", r.generic_hp}, {"samples", s}, {"pass", r.pass}}.dump(2) << "\n";
  } else {
    std::cout << "generic HP = " << r.generic_hp << "\n";
    for (const auto& [c, hp] : r.sample_hp) std::cout << "t = " << c.to_string() << " : HP = " << hp << "\n";
    std::cout << (r.pass ? "constant" : "JUMP") << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_family_degenerations(const Globals& g) {
  auto rows = degeneration_chart_check();
  json a = json::array();
  for (const auto& r : rows) {
    json labels = json::object();
    for (const auto& [c, l] : r.fiber_labels) labels[c.to_string()] = l;
    a.push_back({{"family", r.name}, {"reference", r.documented}, {"labels", labels}, {"flat", r.flat}, {"confirmed", r.confirmed}, {"detail", r.detail}});
  }
  if (g.json) {
    std::cout << a.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << std::left << std::setw(32) << r.name << (r.confirmed ? "confirmed  " : "rejected   ") << r.detail << "\n";
  }
  return 0;
}

int cmd_verify_catalog(const Globals& g) {
  return with_field(field_or_default(g), [&](auto proto) {
    bool all = true;
    json rows = json::array();
    if (!g.json) std::cout << "case  kernel  hp_curve  hp_image  dim_BA  lemma36  singular  result\n";
    for (CaseLabel c : all_cases()) {
      auto v = verify_cm_point(catalog_case(c, proto));
      all = all && v.passed();
      auto mark = [&](const char* n) { return v.check_passed(n) ? "ok" : "FAIL"; };
      if (g.json) {
        rows.push_back({{"case", roman(c)},
                        {"kernel_match", v.check_passed("kernel_match")},
                        {"hp_curve", v.hp_curve},
                        {"hp_image", v.hp_image},
                        {"dim_BA", v.dim_BA ? json(*v.dim_BA) : json(nullptr)},
                        {"lemma36", v.check_passed("lemma36")},
                        {"singular_at_p", v.check_passed("singular_at_p")}});
      } else {
        std::cout << std::left << std::setw(6) << roman(c) << std::setw(8) << mark("kernel_match") << std::setw(10)
                  << mark("hp_curve") << std::setw(10) << mark("hp_image") << std::setw(8)
                  << (v.dim_BA ? std::to_string(*v.dim_BA) : "?") << std::setw(9) << mark("lemma36") << std::setw(10)
                  << mark("singular_at_p") << (v.passed() ? "pass" : "FAIL") << "\n";
      }
    }
    if (g.json) std::cout << json{{"field", proto.field_name()}, {"cases", rows}, {"pass", all}}.dump(2) << "\n";
    return all ? 0 : 1;
  });
}

int cmd_verify_point(const std::string& map_file, const std::string& point, const std::string& label, const Globals& g) {
  RawDocument doc = load(map_file, g);
  return with_field(doc.headers.at(0).field, [&](auto proto) {
    using K = decltype(proto);
    auto m = parse_map_document(doc, proto);
    CMPoint<K> pt{m.target_ideal(), m.map, parse_point(point, proto), std::nullopt};
    if (!label.empty()) pt.label = parse_case(label);
    VerificationReport v = verify_cm_point(pt);
    if (g.json) {
      json checks = json::array();
      for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
      std::cout << json{{"image", v.image}, {"checks", checks}, {"pass", v.passed()}}.dump(2) << "\n";
    } else {
      std::cout << "image " << v.image << "\n";
      for (const auto& c : v.checks) std::cout << std::left << std::setw(15) << c.name << (c.pass ? "ok    " : "FAIL  ") << c.witness << "\n";
    }
    return v.passed() ? 0 : 1;
  });
}

int cmd_report(bool stamp, const Globals& g) {
  return with_field(field_or_default(g), [&](auto proto) {
    ReportDocument doc = run_report(proto);
    if (g.json) {
      std::cout << doc.to_json(stamp ? std::optional<std::string>(timestamp_now()) : std::nullopt).dump(2) << "\n";
    } else {
      std::string section;
      for (const auto& c : doc.checks) {
        if (c.section != section) std::cout << "[" << (section = c.section) << "]\n";
        std::cout << "  " << (c.pass ? "pass  " : "FAIL  ") << c.name << "  (" << c.witness << ")\n";
      }
      std::cout << "overall: " << (doc.pass() ? "pass" : "FAIL") << "\n";
    }
    return doc.pass() ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks on CM curves of degree 3, their plane cubic images and first-order deformations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--order", g.order, "monomial order: lex, grevlex, elim:k");
  app.add_option("--field", g.field, "coefficient field: Q, GF<p>, Qt");
  app.add_flag("--json", g.json, "machine-readable output");

  std::string file, map_file, point, at = "0", samples = "0,1,-2", builtin, label;
  bool construct = false, tangent = false;

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of an ideal file");
  groebner->add_option("file", file, ".ideal file")->required();

  auto* image = app.add_subcommand("image", "kernel of a ring map modulo the target relations");
  image->add_option("--map", map_file, ".map file")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial, degree and genus");
  hilbert->add_option("file", file, ".ideal file")->required();

  auto* classify = app.add_subcommand("classify", "classify a plane cubic with a marked singular point");
  classify->add_option("file", file, ".ideal file of (linear form, cubic)")->required();
  classify->add_option("--point", point, "a,b,c,d")->required();
  classify->add_flag("--construct", construct, "also build the curve and map realizing it");

  auto* deform = app.add_subcommand("deform", "first-order embedded deformations");
  deform->add_option("file", file, ".ideal file");
  deform->add_flag("--tangent-cm", tangent, "tangent space at the triple-line point");

  auto* family = app.add_subcommand("family", "one-parameter families over Q(t)");
  family->require_subcommand(1);
  auto* fiber = family->add_subcommand("fiber", "substitute t = c into the generators");
  fiber->add_option("file", file, "Q(t) .ideal file");
  fiber->add_option("--at", at, "parameter value");
  fiber->add_option("--builtin", builtin, "nodal, double-line or jump");
  auto* fimage = family->add_subcommand("image", "generic image over Q(t) with excluded parameters");
  fimage->add_option("file", file, "Q(t) .map file with curve relations");
  fimage->add_option("--builtin", builtin, "double-line");
  auto* probe = family->add_subcommand("probe", "Hilbert polynomial of generic and sample fibers");
  probe->add_option("file", file, "Q(t) .ideal file");
  probe->add_option("--samples", samples, "comma-separated parameter values");
  probe->add_option("--builtin", builtin, "nodal, double-line or jump");
  auto* degen = family->add_subcommand("degenerations", "degeneration table");

  auto* verify = app.add_subcommand("verify", "verify CM points");
  verify->add_option("target", file, "'catalog' or a .map file")->required();
  verify->add_option("--point", point, "a,b,c,d (for a .map file)");
  verify->add_option("--case", label, "expected label, I..IX");

  auto* report = app.add_subcommand("report", "run every check; exit 0 iff all pass");
  bool no_timestamp = false;
  report->add_flag("--no-timestamp", no_timestamp, "omit the timestamp from --json output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*groebner) return cmd_groebner(file, g);
    if (*image) return cmd_image(map_file, g);
    if (*hilbert) return cmd_hilbert(file, g);
    if (*classify) return cmd_classify(file, point, construct, g);
    if (*deform) {
      if (tangent) return cmd_tangent(g);
      if (file.empty()) throw Error("BadArgument", "deform needs an ideal file or --tangent-cm");
      return cmd_deform_file(file, g);
    }
    if (*family) {
      if (*fiber) return cmd_family_fiber(file, builtin, at, g);
      if (*fimage) return cmd_family_image(file, builtin, g);
      if (*probe) return cmd_family_probe(file, builtin, samples, g);
      if (*degen) return cmd_family_degenerations(g);
    }
    if (*verify) {
      if (file == "catalog") return cmd_verify_catalog(g);
      if (point.empty()) throw Error("BadArgument", "verify <map-file> needs --point");
      return cmd_verify_point(file, point, label, g);
    }
    if (*report) return cmd_report(!no_timestamp, g);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
