#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "cmtwist/error.hpp"
#include "cmtwist/hilbert.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/linalg.hpp"
#include "cmtwist/scalars/prime_field.hpp"
#include "cmtwist/scalars/rational.hpp"
#include "cmtwist/scalars/upoly.hpp"

namespace cmtwist {

enum class CaseLabel { I = 1, II, III, IV, V, VI, VII, VIII, IX };

inline const std::array<CaseLabel, 9>& all_cases() {
  static const std::array<CaseLabel, 9> cases{CaseLabel::I,  CaseLabel::II,  CaseLabel::III,
                                              CaseLabel::IV, CaseLabel::V,   CaseLabel::VI,
                                              CaseLabel::VII, CaseLabel::VIII, CaseLabel::IX};
  return cases;
}

inline std::string roman(CaseLabel c) {
  static const char* names[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  return names[static_cast<int>(c) - 1];
}

inline std::string case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::I: return "nodal";
    case CaseLabel::II: return "cuspidal";
    case CaseLabel::III: return "conic+secant-at-intersection";
    case CaseLabel::IV: return "conic+tangent";
    case CaseLabel::V: return "triangle";
    case CaseLabel::VI: return "concurrent-lines";
    case CaseLabel::VII: return "doubleline+line-point-off-intersection";
    case CaseLabel::VIII: return "doubleline+line-point-at-intersection";
    case CaseLabel::IX: return "triple-line";
  }
  return "?";
}

inline CaseLabel parse_case(std::string_view s) {
  for (CaseLabel c : all_cases())
    if (roman(c) == s) return c;
  throw Error("BadCase", "unknown case label '" + std::string(s) + "'");
}

/// Ambient ring of the image, k[x,y,z,w].
template <Scalar K>
RingPtr<K> plane_ring(const K& proto) {
  return make_ring<K>({"x", "y", "z", "w"}, proto);
}

/// Ambient ring of the curve, k[x,y,w,u].
template <Scalar K>
RingPtr<K> curve_ring(const K& proto) {
  return make_ring<K>({"x", "y", "w", "u"}, proto);
}

/// x ↦ x, y ↦ y, z ↦ 0, w ↦ w.
template <Scalar K>
RingMap<K> standard_projection(const RingPtr<K>& plane, const RingPtr<K>& curve) {
  return RingMap<K>(plane, curve, {var(curve, "x"), var(curve, "y"), Polynomial<K>(curve), var(curve, "w")});
}

template <Scalar K>
struct CMPoint {
  Ideal<K> curve;
  RingMap<K> map;
  std::vector<K> point;  // projective coordinates [x:y:z:w]
  std::optional<CaseLabel> label;
};

template <Scalar K>
std::vector<Polynomial<K>> catalog_curve_generators(CaseLabel c, const RingPtr<K>& T) {
  auto x = var(T, "x"), y = var(T, "y"), w = var(T, "w"), u = var(T, "u");
  switch (c) {
    case CaseLabel::I: return {x * u - y * w, y * u - x * (x + w), u * u - w * (x + w)};
    case CaseLabel::II: return {x * u - y * w, y * u - x * x, u * u - x * w};
    case CaseLabel::III: return {x * u, y * u - (x * x + y * w), u * u - u * w};
    case CaseLabel::IV: return {x * u - (x * x + y * w), y * u, u * u - (x * x + y * w)};
    case CaseLabel::V: return {x * u, y * u - y * w, u * u - u * w};
    case CaseLabel::VI: return {x * u - x * y, y * u - x * y, u * u - y * u};
    case CaseLabel::VII: return {x * u, y * u - x * w, u * u};
    case CaseLabel::VIII: return {x * u - x * x, y * u, u * u - x * u};
    case CaseLabel::IX: return {x * u, y * u - x * x, u * u};
  }
  throw UnsupportedCase(roman(c));
}

/// The plane cubic form q of each catalog image (z, q).
template <Scalar K>
Polynomial<K> catalog_cubic(CaseLabel c, const RingPtr<K>& S) {
  auto x = var(S, "x"), y = var(S, "y"), w = var(S, "w");
  switch (c) {
    case CaseLabel::I: return x.pow(3) + x * x * w - y * y * w;
    case CaseLabel::II: return x.pow(3) - y * y * w;
    case CaseLabel::III: return x.pow(3) + x * y * w;
    case CaseLabel::IV: return x * x * y + y * y * w;
    case CaseLabel::V: return x * y * w;
    case CaseLabel::VI: return x * x * y - x * y * y;
    case CaseLabel::VII: return x * x * w;
    case CaseLabel::VIII: return x * x * y;
    case CaseLabel::IX: return x.pow(3);
  }
  throw UnsupportedCase(roman(c));
}

template <Scalar K>
Ideal<K> catalog_image(CaseLabel c, const K& proto) {
  auto S = plane_ring(proto);
  return Ideal<K>(S, {var(S, "z"), catalog_cubic(c, S)});
}

template <Scalar K>
CMPoint<K> catalog_case(CaseLabel c, const K& proto) {
  auto S = plane_ring(proto);
  auto T = curve_ring(proto);
  K zero = zero_like(proto), one = one_like(proto);
  return {Ideal<K>(T, catalog_curve_generators(c, T)), standard_projection(S, T), {zero, zero, zero, one}, c};
}

template <Scalar K>
Ideal<K> scheme_image(const CMPoint<K>& pt) {
  if (!pt.map.is_graded()) throw NotHomogeneous("the ring map must send variables to linear forms");
  return ring_map_kernel(pt.map, pt.curve);
}

/// Composes the embedding with the projective transform M; the curve itself
/// is untouched, the point moves to M p.
template <Scalar K>
CMPoint<K> transform_cm_point(const CMPoint<K>& pt, const Matrix<K>& M) {
  if (M.determinant().is_zero()) throw SingularMatrix("projective transform must be invertible");
  const auto& T = pt.map.target();
  std::vector<Polynomial<K>> images;
  for (std::size_t v = 0; v < 4; ++v) {
    Polynomial<K> im(T);
    for (std::size_t j = 0; j < 4; ++j)
      if (!M(v, j).is_zero()) im += pt.map.image(j) * M(v, j);
    images.push_back(im);
  }
  return {pt.curve, RingMap<K>(pt.map.source(), T, std::move(images)), M.apply(pt.point), std::nullopt};
}

template <Scalar K>
bool same_projective_point(const std::vector<K>& p, const std::vector<K>& q) {
  if (p.size() != q.size()) return false;
  return rank_of<K>({p, q}, p.size(), p.front()) == 1;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct VerificationReport {
  std::optional<CaseLabel> label;
  std::string image;
  std::string hp_curve;
  std::string hp_image;
  std::optional<long> cokernel_length;
  std::optional<long> dim_BA;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool check_passed(std::string_view name) const {
    const Check* c = find(name);
    return c && c->pass;
  }
};

namespace detail {

template <Scalar K>
std::vector<K> linear_form_coefficients(const Polynomial<K>& f) {
  std::vector<K> c(f.ring()->arity(), f.ring()->zero());
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 1) throw NotHomogeneous("expected a linear form, got " + f.to_string());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (t.mono[i] == 1) c[i] = t.coeff;
  }
  return c;
}

template <Scalar K>
Polynomial<K> linear_form(const RingPtr<K>& R, const std::vector<K>& c) {
  Polynomial<K> f(R);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) f += Polynomial<K>::variable(R, i) * c[i];
  return f;
}

template <Scalar K>
RingPtr<K> without_variable(const RingPtr<K>& R, std::size_t v) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < R->arity(); ++i)
    if (i != v) names.push_back(R->name(i));
  return make_ring<K>(names, R->one());
}

template <Scalar K>
Ideal<K> dehomogenize_ideal(const Ideal<K>& I, std::size_t v, const RingPtr<K>& target) {
  std::vector<Polynomial<K>> out;
  for (const auto& g : I.generators()) out.push_back(g.dehomogenize(v, target));
  return Ideal<K>(target, std::move(out));
}

/// Count of standard monomials of total degree <= d (affine filtration).
template <Scalar K>
long filtered_standard_count(const GroebnerBasis<K>& gb, int d, std::size_t from_var = 0) {
  long count = 0;
  for (int e = 0; e <= d; ++e)
    for (const auto& m : monomials_of_degree(gb.ring()->arity(), e)) {
      bool standard = std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                   [&](const Monomial& l) { return l.divides(m); });
      if (!standard) continue;
      bool involves = from_var == 0;
      for (std::size_t i = 0; i < from_var && !involves; ++i) involves = m[i] > 0;
      if (involves) count++;
    }
  return count;
}

template <Scalar K>
std::vector<Polynomial<K>> jacobian_minors(const std::vector<Polynomial<K>>& gens) {
  std::vector<Polynomial<K>> out;
  if (gens.empty()) return out;
  const std::size_t n = gens.front().ring()->arity();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          auto m = gens[a].partial_derivative(i) * gens[b].partial_derivative(j) -
                   gens[a].partial_derivative(j) * gens[b].partial_derivative(i);
          if (!m.is_zero()) out.push_back(m);
        }
  return out;
}

} // namespace detail

/// Affine data on the chart w ≠ 0 of a CM point, after moving p into it and
/// normalizing the map so that w pulls back to w.
template <Scalar K>
struct ChartData {
  RingPtr<K> curve_chart;  // curve variables except w
  RingPtr<K> image_chart;  // x, y, z
  Ideal<K> curve_ideal;
  Ideal<K> image_ideal;
  RingMap<K> map;          // image_chart -> curve_chart
  std::vector<K> point;    // affine coordinates of p
  bool moved = false;
};

template <Scalar K>
ChartData<K> chart_at_w(CMPoint<K> pt, Ideal<K> image) {
  const auto& S = pt.map.source();
  const auto& T = pt.map.target();
  const K zero = S->zero(), one = S->one();
  bool moved = false;
  if (pt.point[3].is_zero()) {
    // w ↦ w + v_j for a coordinate v_j that does not vanish at p
    Matrix<K> M = Matrix<K>::identity(4, one);
    std::size_t j = 0;
    while (j < 4 && pt.point[j].is_zero()) ++j;
    if (j == 4) throw ChartMiss("the zero vector is not a projective point");
    M(3, j) = one;
    pt = transform_cm_point(pt, M);
    image = pgl_transform(image, M);
    moved = true;
  }

  // Make the pullback of w equal to w by a linear change on the curve side.
  const std::size_t wi = T->require("w");
  std::vector<K> L = detail::linear_form_coefficients(pt.map.image(3));
  std::size_t pivot = wi;
  if (L[pivot].is_zero()) {
    pivot = 0;
    while (pivot < L.size() && L[pivot].is_zero()) ++pivot;
    if (pivot == L.size()) throw ChartMiss("w pulls back to zero; the point is off the chart");
  }
  Matrix<K> N(4, 4, one);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != pivot) others.push_back(i);
  std::size_t slot = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    if (r == wi) {
      for (std::size_t c = 0; c < 4; ++c) N(r, c) = L[c];
    } else {
      N(r, others[slot++]) = one;
    }
  }
  RingMap<K> sub = linear_substitution(T, N.inverse());
  std::vector<Polynomial<K>> curve_gens, images;
  for (const auto& g : pt.curve.generators()) curve_gens.push_back(sub(g));
  for (const auto& im : pt.map.images()) images.push_back(sub(im));

  auto Tc = detail::without_variable(T, wi);
  auto Sc = detail::without_variable(S, 3);
  std::vector<Polynomial<K>> chart_images;
  for (std::size_t v = 0; v < 3; ++v) chart_images.push_back(images[v].dehomogenize(wi, Tc));
  Ideal<K> curve_chart = detail::dehomogenize_ideal(Ideal<K>(T, curve_gens), wi, Tc);
  Ideal<K> image_chart = detail::dehomogenize_ideal(reduced(image), 3, Sc);
  K inv = pt.point[3].inverse();
  std::vector<K> affine{pt.point[0] * inv, pt.point[1] * inv, pt.point[2] * inv};
  (void)zero;
  return {Tc, Sc, curve_chart, image_chart, RingMap<K>(Sc, Tc, std::move(chart_images)), affine, moved};
}

/// Membership in the subalgebra A = φ(k[x,y,z]) of B = k[curve chart]/I,
/// decided by normal forms in the graph ring under an elimination order.
template <Scalar K>
class SubalgebraTest {
public:
  explicit SubalgebraTest(const ChartData<K>& chart) : chart_(chart) {
    const auto& Tc = chart.curve_chart;
    const auto& Sc = chart.image_chart;
    std::vector<std::string> names = Tc->names();
    for (const auto& n : Sc->names()) names.push_back(detail::fresh_name(Tc->names(), n + "'"));
    graph_ = make_ring<K>(names, Tc->one());
    to_graph_.resize(Tc->arity());
    for (std::size_t i = 0; i < Tc->arity(); ++i) to_graph_[i] = i;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : chart.curve_ideal.generators()) gens.push_back(g.reindex(graph_, to_graph_));
    for (std::size_t v = 0; v < Sc->arity(); ++v)
      gens.push_back(Polynomial<K>::variable(graph_, Tc->arity() + v) - chart.map.image(v).reindex(graph_, to_graph_));
    gb_.emplace(buchberger(graph_, gens, MonomialOrder::elimination(static_cast<int>(Tc->arity()))));
  }

  bool contains(const Polynomial<K>& f) const {
    Polynomial<K> nf = normal_form(f.reindex(graph_, to_graph_), *gb_);
    for (std::size_t i = 0; i < chart_.curve_chart->arity(); ++i)
      if (nf.uses_variable(i)) return false;
    return true;
  }

  /// Standard monomials of degree <= d that involve a curve variable; they
  /// form a basis of B/A when that space is finite.
  long quotient_count(int d) const {
    return detail::filtered_standard_count(*gb_, d, chart_.curve_chart->arity());
  }

private:
  const ChartData<K>& chart_;
  RingPtr<K> graph_;
  std::vector<std::size_t> to_graph_;
  std::optional<GroebnerBasis<K>> gb_;
};

/// dim span(B_{<=d}) - dim span(φ(A_{<=d})) for the degree filtration.
template <Scalar K>
long truncated_quotient_dimension(const ChartData<K>& chart, int d) {
  const GroebnerBasis<K>& gb = chart.curve_ideal.basis();
  long b_dim = detail::filtered_standard_count(gb, d);
  std::map<Monomial, std::size_t, std::function<bool(const Monomial&, const Monomial&)>> index(
      [](const Monomial& a, const Monomial& b) { return MonomialOrder::grevlex().less(a, b); });
  std::vector<Polynomial<K>> images;
  for (int e = 0; e <= d; ++e)
    for (const auto& m : monomials_of_degree(chart.image_chart->arity(), e)) {
      Polynomial<K> f = Polynomial<K>::monomial(chart.image_chart, m, chart.image_chart->one());
      Polynomial<K> nf = normal_form(chart.map(f), gb);
      for (const auto& t : nf.terms()) index.try_emplace(t.mono, index.size());
      images.push_back(std::move(nf));
    }
  std::vector<std::vector<K>> rows;
  for (const auto& p : images) {
    std::vector<K> row(index.size(), gb.ring()->zero());
    for (const auto& t : p.terms()) row[index.at(t.mono)] = t.coeff;
    rows.push_back(std::move(row));
  }
  long a_dim = static_cast<long>(rank_of(rows, index.size(), gb.ring()->one()));
  return b_dim - a_dim;
}

/// Ideal of the singular points of a curve given by `gens` (codimension 2 in
/// P^3): the generators together with the 2x2 Jacobian minors.
template <Scalar K>
Ideal<K> jacobian_singular_ideal(const Ideal<K>& J) {
  std::vector<Polynomial<K>> gens = J.generators();
  auto minors = detail::jacobian_minors(J.generators());
  gens.insert(gens.end(), minors.begin(), minors.end());
  return Ideal<K>(J.ring(), std::move(gens));
}

template <Scalar K>
bool vanishes_at(const Ideal<K>& I, const std::vector<K>& p) {
  for (const auto& g : I.generators())
    if (!g.evaluate(p).is_zero()) return false;
  return true;
}

template <Scalar K>
VerificationReport verify_cm_point(const CMPoint<K>& pt) {
  VerificationReport rep;
  rep.label = pt.label;
  Ideal<K> image = scheme_image(pt);
  rep.image = image.to_string();
  const K proto = pt.map.source()->one();

  if (pt.label) {
    bool match = image == catalog_image(*pt.label, proto);
    rep.checks.push_back({"kernel_match", match, rep.image});
  }

  HilbertData hc = hilbert_series(pt.curve);
  HilbertData hi = hilbert_series(image);
  rep.hp_curve = hc.polynomial.to_string();
  rep.hp_image = hi.polynomial.to_string();
  rep.checks.push_back({"hp_curve", hc.polynomial == HilbertPolynomial::linear(3, 1), "HP = " + rep.hp_curve});
  bool image_ok = hi.polynomial == HilbertPolynomial::linear(3, 0);
  HilbertPolynomial diff(std::vector<Rational>{hc.polynomial.coefficient(0) - hi.polynomial.coefficient(0),
                                               hc.polynomial.coefficient(1) - hi.polynomial.coefficient(1),
                                               hc.polynomial.coefficient(2) - hi.polynomial.coefficient(2)});
  if (diff.degree() <= 0 && diff.coefficient(0).is_integer()) rep.cokernel_length = diff.coefficient(0).numerator().get_si();
  rep.checks.push_back({"hp_image", image_ok,
                        "HP = " + rep.hp_image + "; l = " + (rep.cokernel_length ? std::to_string(*rep.cokernel_length) : "?")});

  if (!image_ok) {
    // the chart-level data presuppose a plane cubic image of degree 3
    rep.checks.push_back({"lemma36", false, "skipped: image is not a plane cubic"});
    rep.checks.push_back({"dim_BA", false, "skipped"});
  } else {
    ChartData<K> chart = chart_at_w(pt, image);
    SubalgebraTest<K> sub(chart);
    std::optional<std::size_t> b;
    for (std::size_t v = 0; v < chart.curve_chart->arity() && !b; ++v)
      if (!sub.contains(Polynomial<K>::variable(chart.curve_chart, v))) b = v;
    bool lemma = b.has_value();
    std::string witness;
    if (b) {
      Polynomial<K> bv = Polynomial<K>::variable(chart.curve_chart, *b);
      witness = "b = " + chart.curve_chart->name(*b);
      for (std::size_t v = 0; v < 3; ++v) {
        Polynomial<K> coord = chart.map.image(v) - Polynomial<K>::constant(chart.curve_chart, chart.point[v]);
        bool in = sub.contains(coord * bv);
        lemma = lemma && in;
        witness += std::string("; (") + chart.image_chart->name(v) + "-p)*b " + (in ? "in A" : "not in A");
      }
    } else {
      witness = "B = A";
    }
    if (chart.moved) witness += "; point moved into the w-chart";
    rep.checks.push_back({"lemma36", lemma, witness});

    long la6 = truncated_quotient_dimension(chart, 6), la7 = truncated_quotient_dimension(chart, 7);
    long sm6 = sub.quotient_count(6), sm7 = sub.quotient_count(7);
    bool dim_ok = la6 == 1 && la7 == 1 && sm6 == 1 && sm7 == 1;
    if (la6 == la7) rep.dim_BA = la7;
    rep.checks.push_back({"dim_BA", dim_ok,
                          "linear algebra d=6: " + std::to_string(la6) + ", d=7: " + std::to_string(la7) +
                              "; standard monomials d=6: " + std::to_string(sm6) + ", d=7: " + std::to_string(sm7)});
  }

  Ideal<K> sing = jacobian_singular_ideal(reduced(image));
  bool singular = vanishes_at(sing, pt.point);
  rep.checks.push_back({"singular_at_p", singular, singular ? "Jacobian rank < 2 at p" : "p is a smooth point or off the image"});
  return rep;
}

/// Reporting equivalence: same image, same point, both verified.
template <Scalar K>
bool equivalent_cm_points(const CMPoint<K>& a, const CMPoint<K>& b) {
  return same_projective_point(a.point, b.point) && scheme_image(a) == scheme_image(b) && verify_cm_point(a).passed() &&
         verify_cm_point(b).passed();
}

// ---------------------------------------------------------------------------
// Extension presentations on the chart w = 1.

template <Scalar K>
struct ExtensionPresentation {
  CaseLabel label;
  RingPtr<K> ring;                       // k[x,y,b]
  Polynomial<K> chart_relation;          // q(x,y,1)
  std::vector<Polynomial<K>> relations;  // three relations in b

  Ideal<K> ideal() const {
    std::vector<Polynomial<K>> g{chart_relation};
    g.insert(g.end(), relations.begin(), relations.end());
    return Ideal<K>(ring, std::move(g));
  }
};

template <Scalar K>
ExtensionPresentation<K> extension_ring(CaseLabel c, const K& proto) {
  auto R = make_ring<K>({"x", "y", "b"}, proto);
  auto x = var(R, "x"), y = var(R, "y"), b = var(R, "b");
  auto S = plane_ring(proto);
  auto chart = detail::without_variable(S, 3);
  // q(x,y,1) in k[x,y,z] has no z, so it moves to k[x,y,b] with z ↦ b unused
  Polynomial<K> q = catalog_cubic(c, S).dehomogenize(3, chart).reindex(R, {0, 1, 2});
  switch (c) {
    case CaseLabel::IV: return {c, R, q, {x * b - (x * x + y), y * b, b * b - (x * x + y)}};
    case CaseLabel::VI: return {c, R, q, {x * b - x * y, y * b - x * y, b * b - x * y}};
    case CaseLabel::VII: return {c, R, q, {x * b, y * b - x, b * b}};
    case CaseLabel::VIII: return {c, R, q, {x * b - x * x, y * b, b * b - x * x}};
    case CaseLabel::IX: return {c, R, q, {x * b, y * b - x * x, b * b}};
    default: break;
  }
  throw UnsupportedCase("case " + roman(c) + " is of normalization type and has no extension presentation");
}

struct ChartMatch {
  bool isomorphic = false;
  bool ideals_equal = false;
  std::vector<long> presentation_counts;  // filtered dimensions, degrees 0..6
  std::vector<long> chart_counts;
};

/// Compares the presentation (b ↦ u) with the w-chart of a catalog curve.
template <Scalar K>
ChartMatch extension_matches_chart(const ExtensionPresentation<K>& pres, CaseLabel chart_case) {
  const K proto = pres.ring->one();
  CMPoint<K> pt = catalog_case(chart_case, proto);
  const auto& T = pt.curve.ring();
  auto Tc = detail::without_variable(T, T->require("w"));  // k[x,y,u]
  Ideal<K> chart = detail::dehomogenize_ideal(pt.curve, T->require("w"), Tc);
  std::vector<Polynomial<K>> mapped;
  const Ideal<K> presented = pres.ideal();
  for (const auto& g : presented.generators()) mapped.push_back(g.reindex(Tc, {0, 1, 2}));
  Ideal<K> image(Tc, std::move(mapped));

  ChartMatch out;
  out.ideals_equal = image == chart;
  for (int d = 0; d <= 6; ++d) {
    out.presentation_counts.push_back(detail::filtered_standard_count(image.basis(), d));
    out.chart_counts.push_back(detail::filtered_standard_count(chart.basis(), d));
  }
  out.isomorphic = out.ideals_equal && out.presentation_counts == out.chart_counts;
  return out;
}

// ---------------------------------------------------------------------------
// Plane cubics.

template <Scalar K>
struct PlaneCubic {
  Polynomial<K> linear;
  Polynomial<K> cubic;
  std::vector<K> point;

  Ideal<K> ideal() const { return Ideal<K>(linear.ring(), {linear, cubic}); }

  /// Splits an ideal (ℓ, q) into its linear and cubic generators.
  static PlaneCubic from_ideal(const Ideal<K>& J, std::vector<K> p) {
    const auto& gb = J.basis();
    std::optional<Polynomial<K>> l, q;
    for (const auto& g : gb.elements()) {
      if (g.degree() == 1 && !l) l = g;
      else if (g.degree() == 3 && !q) q = g;
      else throw NotACurve("not a plane cubic: " + J.to_string());
    }
    if (!l || !q) throw NotACurve("not a plane cubic: " + J.to_string());
    return {*l, *q, std::move(p)};
  }
};

template <Scalar K>
Ideal<K> singular_locus(const PlaneCubic<K>& pc) {
  return jacobian_singular_ideal(pc.ideal());
}

/// True when the projective zero set of I is empty.
template <Scalar K>
bool projectively_empty(const Ideal<K>& I) {
  for (std::size_t v = 0; v < I.ring()->arity(); ++v)
    if (!radical_member(Polynomial<K>::variable(I.ring(), v), I)) return false;
  return true;
}

template <Scalar K>
struct StandardPosition {
  Matrix<K> transform;  // plane ↦ z = 0, p ↦ [0:0:0:1]
  Polynomial<K> cubic;  // form in x, y, w
};

/// Projective change of coordinates taking ℓ to z and p to [0:0:0:1].
template <Scalar K>
StandardPosition<K> standard_position(const PlaneCubic<K>& pc) {
  const auto& S = pc.linear.ring();
  const K one = S->one();
  if (pc.point.size() != 4) throw ContextMismatch("point needs four coordinates");
  if (!pc.linear.evaluate(pc.point).is_zero() || !pc.cubic.evaluate(pc.point).is_zero())
    throw NotSingularAtP("the point does not lie on the curve");
  std::vector<K> lc = detail::linear_form_coefficients(pc.linear);

  Matrix<K> annihilator = Matrix<K>::from_rows({pc.point}, 4, one);
  std::vector<std::vector<K>> rows{lc};
  for (const auto& cand : annihilator.nullspace()) {
    if (rows.size() == 3) break;
    auto trial = rows;
    trial.push_back(cand);
    if (rank_of(trial, 4, one) == trial.size()) rows = std::move(trial);
  }
  std::size_t j = 0;
  while (pc.point[j].is_zero()) ++j;
  std::vector<K> ej(4, S->zero());
  ej[j] = one;
  Matrix<K> M = Matrix<K>::from_rows({rows[1], rows[2], rows[0], ej}, 4, one);

  RingMap<K> sub = linear_substitution(S, M.inverse());
  std::vector<Polynomial<K>> zero_z;
  for (std::size_t i = 0; i < 4; ++i) zero_z.push_back(i == 2 ? Polynomial<K>(S) : Polynomial<K>::variable(S, i));
  Polynomial<K> q = sub(pc.cubic).substitute(zero_z);
  if (q.is_zero()) throw NotACurve("the cubic vanishes on the plane");
  return {M, q};
}

template <Scalar K>
UPoly<K> to_univariate(const Polynomial<K>& f, std::size_t v) {
  std::vector<K> c;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.mono.arity(); ++i)
      if (i != v && t.mono[i] > 0) throw ContextMismatch("polynomial is not univariate");
    std::size_t e = static_cast<std::size_t>(t.mono[v]);
    if (c.size() <= e) c.resize(e + 1, f.ring()->zero());
    c[e] = t.coeff;
  }
  return UPoly<K>(std::move(c), f.ring()->one());
}

template <Scalar K>
Polynomial<K> from_univariate(const UPoly<K>& u, const RingPtr<K>& R, std::size_t v) {
  Polynomial<K> f(R);
  for (int i = 0; i <= u.degree(); ++i)
    if (!u.coeff(i).is_zero()) f += Polynomial<K>::variable(R, v, i) * u.coeff(i);
  return f;
}

/// Number of geometric points of a zero-dimensional affine ideal, via the
/// radical J + (squarefree univariate eliminants).
template <Scalar K>
long count_affine_points(const Ideal<K>& J) {
  if (J.is_unit()) return 0;
  const auto& R = J.ring();
  std::vector<Polynomial<K>> gens = J.generators();
  for (std::size_t v = 0; v < R->arity(); ++v) {
    Ideal<K> e = eliminate(J, {R->name(v)});
    if (e.generators().size() != 1) throw Error("NotZeroDimensional", J.to_string());
    gens.push_back(from_univariate(to_univariate(e.generators()[0], v).squarefree_part(), R, v));
  }
  Ideal<K> rad(R, std::move(gens));
  long count = 0;
  for (int d = 0;; ++d) {
    long at_d = 0;
    for (const auto& m : monomials_of_degree(R->arity(), d)) {
      const auto& leads = rad.basis().leading_monomials();
      if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) at_d++;
    }
    if (at_d == 0) break;
    count += at_d;
  }
  return count;
}

/// Distinct singular points of a plane curve given by a form in x, y, w.
template <Scalar K>
long count_singular_points(const Polynomial<K>& q3) {
  const auto& P = q3.ring();  // k[x,y,w]
  std::vector<Polynomial<K>> sing{q3};
  for (std::size_t v = 0; v < 3; ++v) sing.push_back(q3.partial_derivative(v));

  auto A = make_ring<K>({"x", "y"}, P->one());
  std::vector<Polynomial<K>> chart_w;
  for (const auto& g : sing) chart_w.push_back(g.dehomogenize(2, A));
  long total = count_affine_points(Ideal<K>(A, chart_w));

  auto B = make_ring<K>({"x"}, P->one());
  std::vector<Polynomial<K>> line_images{var(B, "x"), Polynomial<K>::constant(B, 1), Polynomial<K>(B)};
  std::vector<Polynomial<K>> chart_y;
  for (const auto& g : sing) chart_y.push_back(g.substitute(line_images));
  total += count_affine_points(Ideal<K>(B, chart_y));

  std::vector<K> corner{P->one(), P->zero(), P->zero()};
  bool at_corner = std::all_of(sing.begin(), sing.end(), [&](const Polynomial<K>& g) { return g.evaluate(corner).is_zero(); });
  return total + (at_corner ? 1 : 0);
}

/// gcd via lcm: (f) ∩ (g) = (lcm).
template <Scalar K>
Polynomial<K> polynomial_gcd(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.monic(MonomialOrder::grevlex());
  if (g.is_zero()) return f.monic(MonomialOrder::grevlex());
  Ideal<K> meet = intersect(Ideal<K>(f.ring(), {f}), Ideal<K>(f.ring(), {g}));
  if (meet.generators().size() != 1) throw Error("InternalError", "intersection of principal ideals is not principal");
  return divide_exact(f * g, meet.generators()[0]).monic(MonomialOrder::grevlex());
}

inline bool is_square(const Rational& a) {
  if (a.sign() < 0) return false;
  return mpz_perfect_square_p(a.numerator().get_mpz_t()) && mpz_perfect_square_p(a.denominator().get_mpz_t());
}

inline bool is_square(const PrimeField& a) {
  if (a.is_zero()) return true;
  PrimeField acc = a.from_int(1), base = a;
  std::uint64_t e = (a.modulus() - 1) / 2;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc.is_one();
}

template <Scalar K>
struct Classification {
  CaseLabel label;
  std::string note;
};

template <Scalar K>
Classification<K> classify_plane_cubic(const PlaneCubic<K>& pc) {
  StandardPosition<K> sp = standard_position(pc);
  const auto& S = pc.linear.ring();
  auto P = make_ring<K>({"x", "y", "w"}, S->one());
  Polynomial<K> q = sp.cubic.reindex(P, {0, 1, 2, 2});  // z does not occur
  auto x = var(P, "x"), y = var(P, "y"), w = var(P, "w");

  for (const auto& m : {w.pow(3), w * w * x, w * w * y})
    if (!q.coefficient(m.terms()[0].mono).is_zero()) throw NotSingularAtP("the curve is smooth at the point");

  Polynomial<K> g = q;
  for (std::size_t v = 0; v < 3; ++v) g = polynomial_gcd(g, q.partial_derivative(v));
  const int repeated = g.degree();
  if (repeated == 2) return {CaseLabel::IX, ""};
  if (repeated == 1) {
    Polynomial<K> other = divide_exact(q, g * g);
    // the point is [0:0:1]; it is the intersection iff the simple line passes through it
    bool through = other.evaluate({P->zero(), P->zero(), P->one()}).is_zero();
    return {through ? CaseLabel::VIII : CaseLabel::VII, ""};
  }

  long points = count_singular_points(q);
  if (points == 3) return {CaseLabel::V, ""};
  if (points == 2) return {CaseLabel::III, ""};
  if (points != 1) throw UnsupportedCase("reduced cubic with " + std::to_string(points) + " singular points");

  auto A = make_ring<K>({"x", "y"}, S->one());
  Polynomial<K> f = q.dehomogenize(2, A);
  int mult = 4;
  for (const auto& t : f.terms()) mult = std::min(mult, t.mono.degree());
  if (mult == 3) return {CaseLabel::VI, ""};

  Polynomial<K> cone = f.part(2);
  auto ax = var(A, "x"), ay = var(A, "y");
  K a = cone.coefficient((ax * ax).terms()[0].mono);
  K b = cone.coefficient((ax * ay).terms()[0].mono);
  K c = cone.coefficient((ay * ay).terms()[0].mono);
  K disc = b * b - a * c * S->scalar(4);
  if (!disc.is_zero()) {
    std::string note;
    if constexpr (std::is_same_v<K, Rational> || std::is_same_v<K, PrimeField>) {
      if (!is_square(disc)) note = "node (split over a quadratic extension)";
    }
    return {CaseLabel::I, note};
  }
  // double tangent line L; component iff L divides q
  Polynomial<K> L = a.is_zero() ? y : x * a + y * (b * S->scalar(2).inverse());
  bool component = Ideal<K>(P, {L}).contains(q);
  return {component ? CaseLabel::IV : CaseLabel::II, ""};
}

namespace detail {

template <Scalar K>
std::vector<K> coefficient_vector(const Polynomial<K>& f, const std::vector<Monomial>& basis) {
  std::vector<K> v;
  for (const auto& m : basis) v.push_back(f.coefficient(m));
  return v;
}

} // namespace detail

/// The CM point over a plane cubic with a rational singular point. In
/// standard position (ℓ = z, p = [0:0:0:1]) it is cut out by
/// xu - Q1, yu - Q2, u^2 - c w u - Q3 with y Q1 - x Q2 = -q and Q1 free of x;
/// the remaining unknowns come from requiring two linear syzygies.
template <Scalar K>
CMPoint<K> cm_point_for(const PlaneCubic<K>& pc) {
  Classification<K> cls = classify_plane_cubic(pc);
  StandardPosition<K> sp = standard_position(pc);
  const auto& S = pc.linear.ring();
  const K one = S->one(), zero = S->zero();
  auto P = make_ring<K>({"x", "y", "w"}, one);
  Polynomial<K> q = sp.cubic.reindex(P, {0, 1, 2, 2});
  auto x = var(P, "x"), y = var(P, "y"), w = var(P, "w");
  auto quad = monomials_of_degree(3, 2);
  auto cubic = monomials_of_degree(3, 3);
  auto lin = monomials_of_degree(3, 1);
  auto mono = [&](const Monomial& m) { return Polynomial<K>::monomial(P, m, one); };

  // Stage 1: Q1 in span{y^2, yw, w^2}, Q2 in S_2 with y Q1 - x Q2 = -q.
  std::vector<Polynomial<K>> q1_basis{y * y, y * w, w * w};
  std::vector<Polynomial<K>> columns;
  for (const auto& b : q1_basis) columns.push_back(y * b);
  for (const auto& m : quad) columns.push_back(-(x * mono(m)));
  Matrix<K> A1(cubic.size(), columns.size(), one);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < cubic.size(); ++r) A1(r, c) = columns[c].coefficient(cubic[r]);
  auto sol1 = A1.solve(detail::coefficient_vector(-q, cubic));
  if (!sol1) throw NotSingularAtP("cubic is not singular at the point");
  Polynomial<K> Q1(P), Q2(P);
  for (std::size_t i = 0; i < 3; ++i) Q1 += q1_basis[i] * (*sol1)[i];
  for (std::size_t i = 0; i < quad.size(); ++i) Q2 += mono(quad[i]) * (*sol1)[3 + i];

  // Stage 2 unknowns: a, b, c, d linear (12), lambda (1), Q3 quadric (6).
  // Equations: Q1 = a x + b y, Q2 = c x + d y,
  //            x Q3 = a Q1 + b Q2 - lambda w Q1, y Q3 = c Q1 + d Q2 - lambda w Q2.
  const std::size_t nA = 0, nB = 3, nC = 6, nD = 9, nLambda = 12, nQ3 = 13, nUnknowns = 19;
  struct Block {
    std::vector<Monomial> rows;
    std::vector<Polynomial<K>> columns;
    Polynomial<K> rhs;
  };
  auto zero_poly = Polynomial<K>(P);
  auto make_block = [&](const std::vector<Monomial>& rows, const Polynomial<K>& rhs) {
    return Block{rows, std::vector<Polynomial<K>>(nUnknowns, zero_poly), rhs};
  };
  std::vector<Block> blocks;
  {
    Block b1 = make_block(quad, Q1), b2 = make_block(quad, Q2);
    for (std::size_t i = 0; i < 3; ++i) {
      b1.columns[nA + i] = mono(lin[i]) * x;
      b1.columns[nB + i] = mono(lin[i]) * y;
      b2.columns[nC + i] = mono(lin[i]) * x;
      b2.columns[nD + i] = mono(lin[i]) * y;
    }
    Block b3 = make_block(cubic, zero_poly), b4 = make_block(cubic, zero_poly);
    for (std::size_t i = 0; i < 3; ++i) {
      b3.columns[nA + i] = -(mono(lin[i]) * Q1);
      b3.columns[nB + i] = -(mono(lin[i]) * Q2);
      b4.columns[nC + i] = -(mono(lin[i]) * Q1);
      b4.columns[nD + i] = -(mono(lin[i]) * Q2);
    }
    b3.columns[nLambda] = w * Q1;
    b4.columns[nLambda] = w * Q2;
    for (std::size_t i = 0; i < quad.size(); ++i) {
      b3.columns[nQ3 + i] = x * mono(quad[i]);
      b4.columns[nQ3 + i] = y * mono(quad[i]);
    }
    blocks = {b1, b2, b3, b4};
  }
  std::size_t total_rows = 0;
  for (const auto& bl : blocks) total_rows += bl.rows.size();
  Matrix<K> A2(total_rows, nUnknowns, one);
  std::vector<K> rhs;
  std::size_t r0 = 0;
  for (const auto& bl : blocks) {
    for (std::size_t r = 0; r < bl.rows.size(); ++r) {
      for (std::size_t c = 0; c < nUnknowns; ++c) A2(r0 + r, c) = bl.columns[c].coefficient(bl.rows[r]);
      rhs.push_back(bl.rhs.coefficient(bl.rows[r]));
    }
    r0 += bl.rows.size();
  }
  auto sol2 = A2.solve(rhs);
  if (!sol2) throw UnsupportedCase("no Cohen-Macaulay extension of the expected shape");
  K lambda = (*sol2)[nLambda];
  Polynomial<K> Q3(P);
  for (std::size_t i = 0; i < quad.size(); ++i) Q3 += mono(quad[i]) * (*sol2)[nQ3 + i];

  auto T = curve_ring(one);
  std::vector<std::size_t> into_curve{0, 1, 2};  // x, y, w keep their positions in k[x,y,w,u]
  auto tx = var(T, "x"), ty = var(T, "y"), tw = var(T, "w"), tu = var(T, "u");
  std::vector<Polynomial<K>> gens{tx * tu - Q1.reindex(T, into_curve), ty * tu - Q2.reindex(T, into_curve),
                                  tu * tu - tw * tu * lambda - Q3.reindex(T, into_curve)};
  CMPoint<K> standard{Ideal<K>(T, gens), standard_projection(S, T), {zero, zero, zero, one}, cls.label};
  CMPoint<K> out = transform_cm_point(standard, sp.transform.inverse());
  out.point = pc.point;
  out.label = cls.label;

  if (!(scheme_image(out) == pc.ideal()))
    throw Error("InternalError", "constructed point does not map onto the given cubic");
  if (hilbert_series(out.curve).polynomial != HilbertPolynomial::linear(3, 1))
    throw Error("InternalError", "constructed curve does not have Hilbert polynomial 3t+1");
  return out;
}

} // namespace cmtwist
