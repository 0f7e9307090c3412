#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmtwist/cmpoints.hpp"
#include "cmtwist/error.hpp"
#include "cmtwist/hilbert.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/scalars/rational.hpp"
#include "cmtwist/scalars/rational_function.hpp"
#include "cmtwist/scalars/upoly.hpp"

namespace cmtwist {

using QT = RationalFunction;

/// Ideal over Q(t) whose generators have polynomial coefficients, together
/// with the parameter values where specialization is not trusted.
struct ParametricIdeal {
  Ideal<QT> ideal;
  std::vector<Rational> exclusions;

  explicit ParametricIdeal(Ideal<QT> I, std::vector<Rational> excluded = {})
      : ideal(std::move(I)), exclusions(std::move(excluded)) {
    for (const auto& g : ideal.generators())
      for (const auto& t : g.terms())
        if (!t.coeff.is_polynomial())
          throw Error("BadFamily", "generator " + g.to_string() + " has a denominator in t");
    std::sort(exclusions.begin(), exclusions.end());
    exclusions.erase(std::unique(exclusions.begin(), exclusions.end()), exclusions.end());
  }

  bool excluded(const Rational& c) const { return std::find(exclusions.begin(), exclusions.end(), c) != exclusions.end(); }
};

inline RingPtr<Rational> rational_twin(const RingPtr<QT>& R) { return make_ring<Rational>(R->names(), Rational(0)); }

inline Polynomial<Rational> specialize(const Polynomial<QT>& f, const RingPtr<Rational>& target, const Rational& c) {
  return f.map_coefficients<Rational>(target, [&](const QT& a) { return a.eval(c); });
}

/// Substitutes t = c into the generators (never into a basis over Q(t)).
inline Ideal<Rational> fiber_at(const ParametricIdeal& P, const Rational& c) {
  if (P.excluded(c)) throw ExcludedParameter("t = " + c.to_string() + " is excluded for this family");
  auto R = rational_twin(P.ideal.ring());
  std::vector<Polynomial<Rational>> gens;
  for (const auto& g : P.ideal.generators()) gens.push_back(specialize(g, R, c));
  return Ideal<Rational>(R, std::move(gens));
}

inline RingMap<Rational> specialize_map(const RingMap<QT>& m, const Rational& c) {
  auto S = rational_twin(m.source());
  auto T = rational_twin(m.target());
  std::vector<Polynomial<Rational>> ims;
  for (const auto& im : m.images()) ims.push_back(specialize(im, T, c));
  return RingMap<Rational>(S, T, std::move(ims));
}

namespace detail {

inline UPoly<Rational> upoly_lcm(const UPoly<Rational>& a, const UPoly<Rational>& b) {
  return (a * b).divmod(gcd(a, b)).first.monic();
}

/// Multiplies out denominators and removes the polynomial content in t.
inline Polynomial<QT> clear_denominators(const Polynomial<QT>& f) {
  UPoly<Rational> l = UPoly<Rational>::constant(Rational(1));
  for (const auto& t : f.terms()) l = upoly_lcm(l, t.coeff.denominator());
  Polynomial<QT> g = f * QT(l, UPoly<Rational>::constant(Rational(1)));
  UPoly<Rational> content(Rational(0));
  for (const auto& t : g.terms()) content = gcd(content, t.coeff.numerator());
  if (content.degree() > 0) g = g * QT(UPoly<Rational>::constant(Rational(1)), content);
  return g;
}

inline void collect_roots(const UPoly<Rational>& p, std::vector<Rational>& out) {
  if (p.degree() <= 0) return;
  for (const auto& r : rational_roots(p)) out.push_back(r);
}

} // namespace detail

/// Kernel over Q(t); every coefficient the engine inverts contributes the
/// rational roots of its numerator and denominator to the exclusions.
inline ParametricIdeal generic_image(const ParametricIdeal& P, const RingMap<QT>& map) {
  std::vector<Rational> excluded = P.exclusions;
  InversionObserver<QT> observer = [&](const QT& c) {
    detail::collect_roots(c.numerator(), excluded);
    detail::collect_roots(c.denominator(), excluded);
  };
  Ideal<QT> kernel = ring_map_kernel(map, P.ideal, EliminationMethod::Block, observer);
  std::vector<Polynomial<QT>> gens;
  for (const auto& g : kernel.generators()) {
    for (const auto& t : g.terms()) detail::collect_roots(t.coeff.denominator(), excluded);
    gens.push_back(detail::clear_denominators(g));
  }
  return ParametricIdeal(Ideal<QT>(kernel.ring(), std::move(gens)), std::move(excluded));
}

struct FlatnessReport {
  std::string generic_hp;
  std::vector<std::pair<Rational, std::string>> sample_hp;
  bool pass = false;
};

inline FlatnessReport flatness_probe(const ParametricIdeal& P, const std::vector<Rational>& samples) {
  FlatnessReport rep;
  HilbertPolynomial generic = hilbert_series(P.ideal).polynomial;
  rep.generic_hp = generic.to_string();
  rep.pass = true;
  for (const auto& c : samples) {
    HilbertPolynomial hp = hilbert_series(fiber_at(P, c)).polynomial;
    rep.sample_hp.push_back({c, hp.to_string()});
    if (!(hp == generic)) rep.pass = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The nodal family: f1 = xz - t yw, f2 = yz - t x(x+w), f3 = z^2 - t^2 w(x+w),
// q = x^3 + x^2 w - y^2 w.

template <Scalar K>
struct NodalFamily {
  Polynomial<K> f1, f2, f3, q;
};

/// `t` is either the field constant (over Q(t)) or a ring variable.
template <Scalar K>
NodalFamily<K> nodal_family(const RingPtr<K>& R, const Polynomial<K>& t, bool perturb_f1 = false) {
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z"), w = var(R, "w");
  NodalFamily<K> f{x * z - t * y * w, y * z - t * x * (x + w), z * z - t * t * w * (x + w),
                   x.pow(3) + x * x * w - y * y * w};
  if (perturb_f1) f.f1 += t * w * w;
  return f;
}

inline ParametricIdeal nodal_family_ideal() {
  auto R = plane_ring(QT());
  auto t = Polynomial<QT>::constant(R, QT::t());
  auto f = nodal_family(R, t);
  return ParametricIdeal(Ideal<QT>(R, {f.f1, f.f2, f.f3, f.q}));
}

/// Expands y f1 - x f2 - t q.
template <Scalar K>
bool syzygy_identity_holds(const RingPtr<K>& R, const Polynomial<K>& t, bool perturb_f1 = false) {
  auto f = nodal_family(R, t, perturb_f1);
  return (var(R, "y") * f.f1 - var(R, "x") * f.f2 - t * f.q).is_zero();
}

inline bool syzygy_identity_check(bool perturb_f1 = false) {
  auto R = plane_ring(QT());
  return syzygy_identity_holds(R, Polynomial<QT>::constant(R, QT::t()), perturb_f1);
}

/// Same identity with t adjoined as a polynomial variable over any field.
template <Scalar K>
bool syzygy_identity_check_over(const K& proto, bool perturb_f1 = false) {
  auto R = make_ring<K>({"t", "x", "y", "z", "w"}, proto);
  return syzygy_identity_holds(R, var(R, "t"), perturb_f1);
}

/// (xz - t yw, x^3) in the plane: dimension drops at t = 0, so the probe fails.
inline ParametricIdeal jumping_family() {
  auto R = plane_ring(QT());
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z"), w = var(R, "w");
  auto t = Polynomial<QT>::constant(R, QT::t());
  return ParametricIdeal(Ideal<QT>(R, {x * z - t * y * w, x.pow(3)}));
}

// ---------------------------------------------------------------------------
// One-parameter degenerations of CM points with the standard projection.

struct Degeneration {
  std::string name;
  CaseLabel source;
  CaseLabel target;
  bool documented;  // a reference family given with the catalog, as opposed to one constructed here
  ParametricIdeal curve;
};

/// (xu, yu - x(x+ty), u^2). For t != 0 the image x^2(x+ty) is a double line
/// and a line meeting at p itself, so the generic fiber classifies as VIII;
/// at t = 0 it is the triple line.
inline ParametricIdeal double_line_family() {
  auto T = curve_ring(QT());
  auto x = var(T, "x"), y = var(T, "y"), u = var(T, "u");
  auto t = Polynomial<QT>::constant(T, QT::t());
  return ParametricIdeal(Ideal<QT>(T, {x * u, y * u - x * (x + t * y), u * u}));
}

/// Catalog curve with w replaced by t w.
inline ParametricIdeal scaled_catalog_family(CaseLabel c) {
  auto T = curve_ring(QT());
  auto t = Polynomial<QT>::constant(T, QT::t());
  std::vector<Polynomial<QT>> images{var(T, "x"), var(T, "y"), t * var(T, "w"), var(T, "u")};
  std::vector<Polynomial<QT>> gens;
  for (const auto& g : catalog_curve_generators(c, T)) gens.push_back(g.substitute(images));
  return ParametricIdeal(Ideal<QT>(T, std::move(gens)));
}

inline ParametricIdeal constant_family(CaseLabel c) {
  auto T = curve_ring(QT());
  return ParametricIdeal(Ideal<QT>(T, catalog_curve_generators(c, T)));
}

inline std::vector<Degeneration> degeneration_table() {
  return {
      {"double line to triple line", CaseLabel::VIII, CaseLabel::IX, true, double_line_family()},
      {"nodal, w -> t*w", CaseLabel::I, CaseLabel::IX, false, scaled_catalog_family(CaseLabel::I)},
      {"cuspidal, w -> t*w", CaseLabel::II, CaseLabel::IX, false, scaled_catalog_family(CaseLabel::II)},
      {"conic and secant, w -> t*w", CaseLabel::III, CaseLabel::IX, false, scaled_catalog_family(CaseLabel::III)},
      {"conic and tangent, w -> t*w", CaseLabel::IV, CaseLabel::VIII, false, scaled_catalog_family(CaseLabel::IV)},
      {"constant triple line", CaseLabel::IX, CaseLabel::IX, false, constant_family(CaseLabel::IX)},
  };
}

struct DegenerationResult {
  std::string name;
  bool documented = false;
  std::vector<std::pair<Rational, std::string>> fiber_labels;  // sampled parameter, classified label
  std::string generic_hp;
  bool flat = false;
  bool confirmed = false;
  std::string detail;
};

/// Classifies the image of the fiber at c, with p = [0:0:0:1].
inline CaseLabel classify_fiber(const ParametricIdeal& curve, const Rational& c) {
  Ideal<Rational> fiber = fiber_at(curve, c);
  auto S = plane_ring(Rational(0));
  CMPoint<Rational> pt{fiber, standard_projection(S, fiber.ring()), {Rational(0), Rational(0), Rational(0), Rational(1)},
                       std::nullopt};
  Ideal<Rational> image = scheme_image(pt);
  return classify_plane_cubic(PlaneCubic<Rational>::from_ideal(image, pt.point)).label;
}

inline DegenerationResult check_degeneration(const Degeneration& d) {
  DegenerationResult r;
  r.name = d.name;
  r.documented = d.documented;
  const std::vector<Rational> generic_samples{Rational(1), Rational(2)};
  bool source_ok = true;
  for (const auto& c : generic_samples) {
    CaseLabel l = classify_fiber(d.curve, c);
    r.fiber_labels.push_back({c, roman(l)});
    source_ok = source_ok && l == d.source;
  }
  CaseLabel special = classify_fiber(d.curve, Rational(0));
  r.fiber_labels.push_back({Rational(0), roman(special)});
  FlatnessReport flat = flatness_probe(d.curve, {Rational(0), Rational(1), Rational(2)});
  r.generic_hp = flat.generic_hp;
  r.flat = flat.pass && flat.generic_hp == "3*t + 1";
  bool moves = d.source != d.target;
  r.confirmed = source_ok && special == d.target && r.flat && moves;
  if (!moves) r.detail = "self-loop: not a degeneration";
  else if (!source_ok) r.detail = "generic fibers do not classify as " + roman(d.source);
  else if (special != d.target) r.detail = "special fiber classifies as " + roman(special);
  else if (!r.flat) r.detail = "Hilbert polynomial jumps";
  else r.detail = roman(d.source) + " -> " + roman(d.target);
  return r;
}

inline std::vector<DegenerationResult> degeneration_chart_check() {
  std::vector<DegenerationResult> out;
  for (const auto& d : degeneration_table()) out.push_back(check_degeneration(d));
  return out;
}

} // namespace cmtwist
