// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "cmtwist/cmtwist.hpp"
#include "oracles/oracles.hpp"
#include "support/support.hpp"

using namespace cmtwist;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  if (!out.pass) ++failures;
  std::cout << "criterion " << n << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title;
  if (!out.detail.empty()) std::cout << "  [" << out.detail << "]";
  std::cout << std::endl;
}

template <Scalar K>
std::vector<Ideal<K>> catalog_ideals(const K& proto) {
  std::vector<Ideal<K>> out;
  auto T = curve_ring(proto);
  for (CaseLabel c : all_cases()) {
    out.emplace_back(T, catalog_curve_generators(c, T));
    out.push_back(catalog_image(c, proto));
  }
  return out;
}

template <Scalar K>
std::vector<K> origin_w(const K& proto) {
  return {zero_like(proto), zero_like(proto), zero_like(proto), one_like(proto)};
}

template <Scalar K>
void classification_invariance(Outcome& out, const K& proto, int transforms) {
  std::mt19937 rng(7 + static_cast<unsigned>(transforms));
  for (CaseLabel c : all_cases()) {
    Ideal<K> image = catalog_image(c, proto);
    for (int k = 0; k < transforms; ++k) {
      Matrix<K> M = support::random_unimodular(rng, proto);
      Ideal<K> moved = pgl_transform(image, M);
      auto pc = PlaneCubic<K>::from_ideal(moved, transform_point(M, origin_w(proto)));
      CaseLabel got = classify_plane_cubic(pc).label;
      out.require(got == c, proto.field_name() + " " + roman(c) + " transform " + std::to_string(k) + " gave " + roman(got));
    }
  }
}

template <Scalar K>
void membership_agreement(Outcome& out, const K& proto) {
  for (const auto& I : catalog_ideals(proto)) {
    const auto& R = I.ring();
    for (int d = 0; d <= 6; ++d) {
      oracle::MacaulaySpan<K> span(R, I.generators(), d);
      for (const auto& m : monomials_of_degree(R->arity(), d)) {
        auto f = Polynomial<K>::monomial(R, m, R->one());
        out.require(I.contains(f) == span.contains(f), "membership of " + f.to_string() + " in " + I.to_string());
      }
    }
  }
}

template <Scalar K>
std::vector<long> dimensions_over(const K& proto) {
  std::vector<long> d;
  auto T = curve_ring(proto);
  for (CaseLabel c : all_cases()) {
    Ideal<K> I(T, catalog_curve_generators(c, T));
    VerificationReport v = verify_cm_point(catalog_case(c, proto));
    d.push_back(v.dim_BA.value_or(-1));
    d.push_back(v.cokernel_length.value_or(-1));
    d.push_back(static_cast<long>(embedded_deformations(I).dimension()));
    d.push_back(static_cast<long>(syzygy_basis(T, I.generators()).syzygies.size()));
    for (long t = 0; t <= 8; ++t) d.push_back(hilbert_function(I, t));
    for (long t = 0; t <= 8; ++t) d.push_back(hilbert_function(scheme_image(catalog_case(c, proto)), t));
  }
  TangentReport<K> tr = cm_tangent_triple_line(proto);
  for (std::size_t n : {tr.raw_count, tr.action_rank, tr.quotient_dimension, tr.listed_rank}) d.push_back(static_cast<long>(n));
  return d;
}

template <Scalar K>
void tangent_dimensions(Outcome& out, const K& proto) {
  TangentReport<K> tr = cm_tangent_triple_line(proto);
  std::string f = proto.field_name() + " ";
  out.require(tr.raw_count == 28, f + "raw " + std::to_string(tr.raw_count));
  out.require(tr.action_rank == 16, f + "action rank " + std::to_string(tr.action_rank));
  out.require(tr.quotient_dimension == 12, f + "quotient " + std::to_string(tr.quotient_dimension));
  if (!tr.listed_span_matches) {
    std::string moving;
    for (const auto& fn : tr.listed_functionals)
      if (!fn.invariant) moving += (moving.empty() ? "" : ", ") + fn.name;
    out.require(false, f + "listed functionals do not span the invariant space (not invariant: " + moving + ")");
  }
}

const std::set<std::string> kBroken{"dangling_caret.ideal", "unknown_variable.ideal", "bad_header.ideal"};

std::vector<std::string> fixtures_with(const std::string& ext) {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(CMTWIST_FIXTURES))
    if (e.path().extension() == ext && !kBroken.count(e.path().filename().string())) out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

int main() {
  criterion(1, "kernels of the nine catalog maps", [](Outcome& out) {
    for (CaseLabel c : all_cases()) {
      auto doc = parse_map_text(support::read_fixture("case_" + roman(c) + ".map"), Rational(1));
      Ideal<Rational> kernel = ring_map_kernel(doc.map, doc.target_ideal());
      auto expected = parse_ideal_text(support::read_fixture("image_" + roman(c) + ".ideal"), Rational(1)).ideal;
      out.require(kernel == expected, roman(c) + " kernel " + kernel.to_string());
      out.require(kernel == catalog_image(c, Rational(1)), roman(c) + " differs from the built-in catalog");
    }
  });

  criterion(2, "Hilbert polynomials, degree and genus", [](Outcome& out) {
    for (CaseLabel c : all_cases()) {
      CMPoint<Rational> pt = catalog_case(c, Rational(1));
      Ideal<Rational> image = scheme_image(pt);
      HilbertData hc = hilbert_series(pt.curve), hi = hilbert_series(image);
      out.require(hc.polynomial == HilbertPolynomial::linear(3, 1), roman(c) + " curve HP " + hc.polynomial.to_string());
      out.require(hi.polynomial == HilbertPolynomial::linear(3, 0), roman(c) + " image HP " + hi.polynomial.to_string());
      DegreeGenus dc = degree_genus(hc), di = degree_genus(hi);
      out.require(dc.degree == Rational(3) && dc.genus == Rational(0), roman(c) + " curve degree/genus");
      out.require(di.degree == Rational(3) && di.genus == Rational(1), roman(c) + " image degree/genus");
    }
  });

  criterion(3, "dim B/A = 1 and (x, y)B in A, truncations 6 and 7", [](Outcome& out) {
    for (CaseLabel c : all_cases()) {
      VerificationReport v = verify_cm_point(catalog_case(c, Rational(1)));
      const Check* dim = v.find("dim_BA");
      const Check* sub = v.find("lemma36");
      out.require(dim && dim->pass && v.dim_BA == std::optional<long>(1), roman(c) + " dim_BA " + (dim ? dim->witness : "missing"));
      out.require(sub && sub->pass, roman(c) + " lemma36 " + (sub ? sub->witness : "missing"));
    }
  });

  criterion(4, "extension presentations match the w-charts", [](Outcome& out) {
    for (CaseLabel c : {CaseLabel::IV, CaseLabel::VI, CaseLabel::VII, CaseLabel::VIII, CaseLabel::IX}) {
      ChartMatch m = extension_matches_chart(extension_ring(c, Rational(1)), c);
      out.require(m.ideals_equal, roman(c) + " ideals differ");
      out.require(m.isomorphic, roman(c) + " filtered counts differ");
    }
  });

  criterion(5, "nodal family: identity, special fiber, saturation, flatness", [](Outcome& out) {
    out.require(syzygy_identity_check(), "y*f1 - x*f2 - t*q is not 0");
    out.require(!syzygy_identity_check(true), "perturbed identity still expands to 0");
    ParametricIdeal Z = nodal_family_ideal();
    Ideal<Rational> Z0 = fiber_at(Z, Rational(0));
    auto S = Z0.ring();
    auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), w = var(S, "w");
    auto q = x.pow(3) + x * x * w - y * y * w;
    out.require(Z0 == Ideal<Rational>(S, {x * z, y * z, z * z, q}), "Z0 = " + Z0.to_string());
    Ideal<Rational> sat = saturate(Z0, Ideal<Rational>(S, {x, y, z}));
    out.require(sat == Ideal<Rational>(S, {z, q}), "saturation " + sat.to_string());
    out.require(!(sat == Z0), "Z0 has no embedded point");
    FlatnessReport fl = flatness_probe(Z, {Rational(0), Rational(1), Rational(-2)});
    out.require(fl.generic_hp == "3*t + 1", "generic HP " + fl.generic_hp);
    for (const auto& [c, hp] : fl.sample_hp) out.require(hp == "3*t + 1", "HP at t=" + c.to_string() + " is " + hp);
    out.require(fl.pass, "flatness probe failed");
  });

  criterion(6, "double line specialization: images and labels VII (t=1), IX (t=0)", [](Outcome& out) {
    ParametricIdeal P = double_line_family();
    auto S = plane_ring(QT());
    ParametricIdeal img = generic_image(P, standard_projection(S, P.ideal.ring()));
    auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
    auto t = Polynomial<QT>::constant(S, QT::t());
    out.require(img.ideal == Ideal<QT>(S, {z, x.pow(3) + t * x * x * y}), "generic image " + img.ideal.to_string());
    Ideal<Rational> special = fiber_at(img, Rational(0));
    auto R = special.ring();
    out.require(special == Ideal<Rational>(R, {var(R, "z"), var(R, "x").pow(3)}), "image at t=0 " + special.to_string());
    CaseLabel at1 = classify_fiber(P, Rational(1)), at0 = classify_fiber(P, Rational(0));
    out.require(at1 == CaseLabel::VII, "t=1 classified " + roman(at1) + ", expected VII");
    out.require(at0 == CaseLabel::IX, "t=0 classified " + roman(at0) + ", expected IX");
  });

  criterion(7, "Hilbert functions and linear syzygies of the curve ideals", [](Outcome& out) {
    for (CaseLabel c : all_cases()) {
      auto T = curve_ring(Rational(1));
      auto gens = catalog_curve_generators(c, T);
      Ideal<Rational> I(T, gens);
      out.require(hilbert_function(I, 1) == 4, roman(c) + " HF(1)");
      for (long t = 1; t <= 8; ++t) out.require(hilbert_function(I, t) == 3 * t + 1, roman(c) + " HF(" + std::to_string(t) + ")");
      out.require(gens.size() == 3, roman(c) + " generator count");
      for (const auto& g : gens) out.require(g.is_homogeneous() && g.degree() == 2, roman(c) + " generator not a quadric");
      auto syz = syzygy_basis(T, gens);
      out.require(syz.syzygies.size() == 2, roman(c) + " " + std::to_string(syz.syzygies.size()) + " syzygies");
      for (const auto& s : syz.syzygies)
        for (const auto& e : s) out.require(e.is_zero() || (e.is_homogeneous() && e.degree() == 1), roman(c) + " nonlinear entry");
    }
  });

  criterion(8, "embedded deformations of (xu, yu - x^2, u^2)", [](Outcome& out) {
    auto T = curve_ring(Rational(1));
    auto x = var(T, "x"), y = var(T, "y"), u = var(T, "u");
    Ideal<Rational> I(T, {x * u, y * u - x * x, u * u});
    out.require(I == Ideal<Rational>(T, catalog_curve_generators(CaseLabel::IX, T)), "catalog IX differs");
    DeformationBasis<Rational> db = embedded_deformations(I);
    out.require(db.dimension() == 12, "dimension " + std::to_string(db.dimension()));
    TangentReport<Rational> tr = cm_tangent_triple_line(Rational(1));
    out.require(tr.family_contained, "explicit family not inside the solution space");
    out.require(tr.third_generator_forced, "p3 coefficients not forced");
  });

  criterion(9, "tangent space: 28 / 16 / 12 and the listed functionals (Q, GF(7))", [](Outcome& out) {
    tangent_dimensions(out, Rational(1));
    tangent_dimensions(out, PrimeField(1, 7));
  });

  criterion(10, "property suites", [](Outcome& out) {
    for (const auto& I : catalog_ideals(Rational(1))) {
      auto gens = I.generators();
      auto by_text = [](const auto& a, const auto& b) { return a.to_string() < b.to_string(); };
      std::sort(gens.begin(), gens.end(), by_text);
      auto reference = buchberger(I.ring(), gens);
      do out.require(buchberger(I.ring(), gens) == reference, "order dependence in " + I.to_string());
      while (std::next_permutation(gens.begin(), gens.end(), by_text));
    }
    membership_agreement(out, Rational(1));
    membership_agreement(out, PrimeField(1, 7));
    classification_invariance(out, Rational(1), 20);
    classification_invariance(out, PrimeField(1, 7), 20);
    auto q = dimensions_over(Rational(1));
    out.require(dimensions_over(PrimeField(1, 5)) == q, "GF(5) dimensions differ");
    out.require(dimensions_over(PrimeField(1, 7)) == q, "GF(7) dimensions differ");
    for (const auto& name : fixtures_with(".ideal")) {
      std::string text = support::read_fixture(name);
      with_scalars(split_document(text).headers.at(0).field, [&](const auto& proto) {
        auto doc = parse_ideal_text(text, proto);
        auto again = parse_ideal_text(doc.print(), proto);
        out.require(again == doc && again.print() == doc.print(), "round trip " + name);
      });
    }
    for (const auto& name : fixtures_with(".map")) {
      std::string text = support::read_fixture(name);
      with_field(split_document(text).headers.at(0).field, [&](const auto& proto) {
        auto doc = parse_map_text(text, proto);
        auto again = parse_map_text(doc.print(), proto);
        out.require(again == doc && again.print() == doc.print(), "round trip " + name);
      });
    }
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
