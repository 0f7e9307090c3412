#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmtwist/cmpoints.hpp"
#include "cmtwist/error.hpp"
#include "cmtwist/groebner.hpp"
#include "cmtwist/hilbert.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/linalg.hpp"
#include "cmtwist/scalars/dual.hpp"

namespace cmtwist {

/// First-order embedded deformations g_i + eps*h_i of a homogeneous ideal,
/// with h_i in normal form in (S/I)_{deg g_i}.
template <Scalar K>
struct DeformationBasis {
  Ideal<K> ideal;
  std::vector<Polynomial<K>> generators;
  std::vector<std::vector<Monomial>> slots;  // standard monomials per generator degree
  SyzygyBasis<K> syzygies;
  std::vector<std::vector<Polynomial<K>>> basis;
  // witnesses[k][s]: corrections r' with sum (r_i + eps r'_i)(g_i + eps h_i) = 0
  std::vector<std::vector<std::vector<Polynomial<K>>>> witnesses;

  std::size_t dimension() const { return basis.size(); }
  std::size_t slot_count() const {
    std::size_t n = 0;
    for (const auto& s : slots) n += s.size();
    return n;
  }

  /// Coordinates of NF(h_i) in the concatenated slot basis.
  std::vector<K> coordinates(const std::vector<Polynomial<K>>& tuple) const {
    const auto& gb = ideal.basis();
    std::vector<K> v;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      Polynomial<K> nf = normal_form(tuple[i], gb);
      for (const auto& m : slots[i]) v.push_back(nf.coefficient(m));
    }
    return v;
  }

  std::vector<Polynomial<K>> tuple_from(const std::vector<K>& coords) const {
    std::vector<Polynomial<K>> out;
    std::size_t k = 0;
    for (const auto& s : slots) {
      std::vector<Term<K>> terms;
      for (const auto& m : s) terms.push_back({m, coords[k++]});
      out.push_back(Polynomial<K>(ideal.ring(), std::move(terms)));
    }
    return out;
  }

  /// The lifting condition: NF(sum r_i h_i) = 0 for every generating syzygy.
  bool satisfies_lifting(const std::vector<Polynomial<K>>& tuple) const {
    const auto& gb = ideal.basis();
    for (const auto& r : syzygies.syzygies) {
      Polynomial<K> s(ideal.ring());
      for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * tuple[i];
      if (!normal_form(s, gb).is_zero()) return false;
    }
    return true;
  }
};

namespace detail {

template <Scalar K>
Polynomial<Dual<K>> to_dual(const Polynomial<K>& f, const RingPtr<Dual<K>>& D, const Polynomial<K>* eps_part = nullptr) {
  Polynomial<Dual<K>> out = f.template map_coefficients<Dual<K>>(D, [](const K& c) { return Dual<K>(c); });
  if (eps_part)
    out += eps_part->template map_coefficients<Dual<K>>(D, [](const K& c) { return Dual<K>(zero_like(c), c); });
  return out;
}

template <Scalar K>
Polynomial<K> eps_part(const Polynomial<Dual<K>>& f, const RingPtr<K>& R) {
  return f.template map_coefficients<K>(R, [](const Dual<K>& c) { return c.infinitesimal(); });
}

template <Scalar K>
Polynomial<K> real_part(const Polynomial<Dual<K>>& f, const RingPtr<K>& R) {
  return f.template map_coefficients<K>(R, [](const Dual<K>& c) { return c.real(); });
}

template <Scalar K>
RingPtr<Dual<K>> dual_ring(const RingPtr<K>& R) {
  return make_ring<Dual<K>>(R->names(), Dual<K>(R->one()));
}

} // namespace detail

/// Checks sum (r_i + eps r'_i)(g_i + eps h_i) = 0 over the dual numbers.
template <Scalar K>
bool dual_syzygy_vanishes(const std::vector<Polynomial<K>>& g, const std::vector<Polynomial<K>>& h,
                          const std::vector<Polynomial<K>>& r, const std::vector<Polynomial<K>>& r_eps) {
  auto R = g.front().ring();
  auto D = detail::dual_ring(R);
  Polynomial<Dual<K>> total(D);
  for (std::size_t i = 0; i < g.size(); ++i)
    total += detail::to_dual(r[i], D, &r_eps[i]) * detail::to_dual(g[i], D, &h[i]);
  return total.is_zero();
}

template <Scalar K>
DeformationBasis<K> embedded_deformations(const Ideal<K>& I) {
  if (!I.is_homogeneous()) throw NotHomogeneous("embedded deformations need homogeneous generators");
  const auto R = I.ring();
  const MonomialOrder ord = MonomialOrder::grevlex();
  DeformationBasis<K> db{I, I.generators(), {}, {}, {}, {}};
  const auto& gb = I.basis(ord);
  for (const auto& g : db.generators) db.slots.push_back(standard_monomials(I, g.degree(), ord));
  db.syzygies = db.generators.empty() ? SyzygyBasis<K>{} : syzygy_basis(R, db.generators, ord);

  // one column per (generator, standard monomial); one row per (syzygy, monomial of the normal form)
  std::map<std::pair<std::size_t, std::vector<int>>, std::size_t> row_index;
  for (std::size_t i = 0; i < db.slots.size(); ++i)
    for (const auto& m : db.slots[i]) {
      for (std::size_t s = 0; s < db.syzygies.syzygies.size(); ++s) {
        Polynomial<K> nf = normal_form(db.syzygies.syzygies[s][i].mul_term(m, R->one()), gb);
        for (const auto& t : nf.terms()) {
          auto key = std::make_pair(s, t.mono.exponents());
          if (!row_index.count(key)) row_index.emplace(key, row_index.size());
        }
      }
    }
  const std::size_t n = db.slot_count();
  Matrix<K> A(row_index.size(), n, R->one());
  std::size_t c = 0;
  for (std::size_t i = 0; i < db.slots.size(); ++i)
    for (const auto& m : db.slots[i]) {
      for (std::size_t s = 0; s < db.syzygies.syzygies.size(); ++s) {
        Polynomial<K> nf = normal_form(db.syzygies.syzygies[s][i].mul_term(m, R->one()), gb);
        for (const auto& t : nf.terms()) A(row_index.at({s, t.mono.exponents()}), c) = t.coeff;
      }
      ++c;
    }
  std::vector<std::vector<K>> kernel;
  if (row_index.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<K> e(n, R->zero());
      e[j] = R->one();
      kernel.push_back(std::move(e));
    }
  } else {
    kernel = A.nullspace();
  }

  TrackedBasis<K> tb = tracked_buchberger(R, db.generators, ord);
  for (const auto& v : kernel) {
    auto h = db.tuple_from(v);
    std::vector<std::vector<Polynomial<K>>> wit;
    for (const auto& r : db.syzygies.syzygies) {
      Polynomial<K> s(R);
      for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * h[i];
      auto cof = lift(-s, tb);
      if (!cof) throw Error("InternalError", "deformation does not lift along a syzygy");
      if (!dual_syzygy_vanishes(db.generators, h, r, *cof))
        throw Error("InternalError", "lifted syzygy does not vanish over the dual numbers");
      wit.push_back(std::move(*cof));
    }
    db.basis.push_back(std::move(h));
    db.witnesses.push_back(std::move(wit));
  }
  return db;
}

/// Three quadrics with exactly two linear generating syzygies.
template <Scalar K>
bool resolution_check(const Ideal<K>& I) {
  const auto& g = I.generators();
  if (g.size() != 3) return false;
  for (const auto& p : g)
    if (!p.is_homogeneous() || p.degree() != 2) return false;
  auto syz = syzygy_basis(I.ring(), g);
  if (syz.syzygies.size() != 2) return false;
  for (const auto& r : syz.syzygies)
    for (const auto& e : r)
      if (!e.is_zero() && (!e.is_homogeneous() || e.degree() != 1)) return false;
  return true;
}

struct RegularityReport {
  std::vector<long> values;  // HF(0..8)
  bool pass = false;
};

/// HF(t) = 3t + 1 for 1 <= t <= 8, in particular HF(1) = 4.
template <Scalar K>
RegularityReport regularity_check(const Ideal<K>& I) {
  RegularityReport rep;
  HilbertData hd = hilbert_series(I);
  rep.pass = true;
  for (long t = 0; t <= 8; ++t) {
    rep.values.push_back(hd.function(t).get_si());
    if (t >= 1 && rep.values.back() != 3 * t + 1) rep.pass = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Tangent space of the CM space at the triple line (xu, yu - x^2, u^2).
// Parameters: a1..a12 (embedded deformation, columns 0..11) then b1..b16
// (eps-parts of the images of x, y, z, w, columns 12..27).

template <Scalar K>
struct Functional {
  std::string name;
  std::vector<K> coeffs;  // length 28
  bool invariant = false;
};

template <Scalar K>
struct TangentReport {
  std::size_t raw_count = 0;
  std::size_t action_rank = 0;
  std::size_t quotient_dimension = 0;
  std::size_t deformation_dimension = 0;
  bool family_contained = false;     // every a-direction satisfies the lifting condition
  bool third_generator_forced = false;  // solver reproduces the p3 coefficients from p1, p2
  std::vector<std::vector<K>> invariant_basis;  // annihilator of the action image
  std::vector<Functional<K>> listed_functionals;
  std::size_t listed_rank = 0;
  bool listed_span_matches = false;
  // single-index corrections of failing functionals that restore the span
  std::vector<std::pair<std::string, std::string>> repairs;
};

namespace detail {

inline std::string parameter_name(std::size_t i) { return i < 12 ? "a" + std::to_string(i + 1) : "b" + std::to_string(i - 11); }

template <Scalar K>
std::string functional_string(const std::vector<K>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    std::string c = f[i].to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (s.empty()) s = neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += (c == "1" ? "" : c + "*") + parameter_name(i);
  }
  return s.empty() ? "0" : s;
}

/// Perturbation tuple for a = e_k in the explicit family, with p3's part
/// written as printed: (a2+a10)x^2 + a4 xy + a5 xw + (a3+a11)wu.
template <Scalar K>
std::vector<Polynomial<K>> printed_family_direction(const RingPtr<K>& T, std::size_t k) {
  auto x = var(T, "x"), y = var(T, "y"), w = var(T, "w"), u = var(T, "u");
  const std::vector<Polynomial<K>> quad{x * x, x * y, x * w, y * y, y * w, w * u};
  Polynomial<K> zero(T);
  std::vector<Polynomial<K>> h{zero, zero, zero};
  if (k < 6) h[0] = quad[k];
  else h[1] = quad[k - 6];
  const std::size_t a = k + 1;
  if (a == 2 || a == 10) h[2] += x * x;
  if (a == 4) h[2] += x * y;
  if (a == 5) h[2] += x * w;
  if (a == 3 || a == 11) h[2] += w * u;
  return h;
}

template <Scalar K>
std::vector<K> named_functional(const K& proto, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  std::vector<K> f(28, zero_like(proto));
  for (const auto& [i, c] : entries) f[i] = proto.from_rational(c);
  return f;
}

// indices into the 28 parameters
constexpr std::size_t A(std::size_t i) { return i - 1; }
constexpr std::size_t B(std::size_t i) { return 11 + i; }

template <Scalar K>
std::vector<Functional<K>> printed_functionals(const K& proto) {
  const Rational one(1), m1(-1), third(mpq_class(1, 3)), half(mpq_class(1, 2));
  std::vector<Functional<K>> fs{
      {"a2 - a10", named_functional(proto, {{A(2), one}, {A(10), m1}})},
      {"a3 - a11", named_functional(proto, {{A(3), one}, {A(11), m1}})},
      {"a4", named_functional(proto, {{A(4), one}})},
      {"a5", named_functional(proto, {{A(5), one}})},
      {"b2 + 1/3*(a8 - a1)", named_functional(proto, {{B(2), one}, {A(8), third}, {A(1), -third}})},
      {"b3 + 1/2*a9", named_functional(proto, {{B(3), one}, {A(9), half}})},
      {"b4 - a6", named_functional(proto, {{B(4), one}, {A(6), m1}})},
      {"b7 - a12", named_functional(proto, {{B(7), one}, {A(12), m1}})},
      {"b9", named_functional(proto, {{B(9), one}})},
      {"b10", named_functional(proto, {{B(10), one}})},
      {"b11", named_functional(proto, {{B(11), one}})},
      {"b12", named_functional(proto, {{B(12), one}})},
  };
  return fs;
}

template <Scalar K>
bool annihilates(const std::vector<K>& f, const Matrix<K>& L) {
  for (std::size_t j = 0; j < L.cols(); ++j) {
    K s = zero_like(f.front());
    for (std::size_t i = 0; i < L.rows(); ++i) s = s + f[i] * L(i, j);
    if (!s.is_zero()) return false;
  }
  return true;
}

} // namespace detail

template <Scalar K>
TangentReport<K> cm_tangent_triple_line(const K& proto) {
  TangentReport<K> rep;
  auto T = curve_ring(proto);
  Ideal<K> I(T, catalog_curve_generators(CaseLabel::IX, T));
  DeformationBasis<K> db = embedded_deformations(I);
  rep.deformation_dimension = db.dimension();

  // alignment: columns are the printed a-directions in slot coordinates
  const std::size_t slots = db.slot_count();
  Matrix<K> P(slots, 12, proto);
  rep.family_contained = true;
  for (std::size_t k = 0; k < 12; ++k) {
    auto h = detail::printed_family_direction(T, k);
    if (!db.satisfies_lifting(h)) rep.family_contained = false;
    auto v = db.coordinates(h);
    for (std::size_t i = 0; i < slots; ++i) P(i, k) = v[i];
  }
  if (!rep.family_contained || P.rank() != 12 || db.dimension() != 12) {
    std::string solved, printed;
    for (const auto& h : db.basis) solved += "(" + h[0].to_string() + ", " + h[1].to_string() + ", " + h[2].to_string() + ") ";
    for (std::size_t k = 0; k < 12; ++k) {
      auto h = detail::printed_family_direction(T, k);
      printed += "(" + h[0].to_string() + ", " + h[1].to_string() + ", " + h[2].to_string() + ") ";
    }
    throw AlignmentFailure("solved basis: " + solved + "| printed family: " + printed);
  }

  // the third component is determined by the first two inside the solved space
  {
    const std::size_t n1 = db.slots[0].size() + db.slots[1].size();
    Matrix<K> head(n1, db.dimension(), proto);
    for (std::size_t k = 0; k < db.dimension(); ++k) {
      auto v = db.coordinates(db.basis[k]);
      for (std::size_t i = 0; i < n1; ++i) head(i, k) = v[i];
    }
    rep.third_generator_forced = head.rank() == db.dimension();
    for (std::size_t k = 0; k < 12 && rep.third_generator_forced; ++k) {
      auto h = detail::printed_family_direction(T, k);
      auto v = db.coordinates(h);
      std::vector<K> lhs(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n1));
      auto comb = head.solve(lhs);
      if (!comb) {
        rep.third_generator_forced = false;
        break;
      }
      std::vector<K> full(slots, zero_like(proto));
      for (std::size_t j = 0; j < db.dimension(); ++j) {
        auto bj = db.coordinates(db.basis[j]);
        for (std::size_t i = 0; i < slots; ++i) full[i] = full[i] + (*comb)[j] * bj[i];
      }
      if (full != v) rep.third_generator_forced = false;
    }
  }

  // action of the linear substitutions s, computed over k[eps]
  auto D = detail::dual_ring(T);
  const std::vector<std::string> curve_vars{"x", "y", "w", "u"};
  const auto& g = db.generators;
  Matrix<K> L(28, 16, proto);
  for (std::size_t si = 0; si < 16; ++si) {
    std::vector<Polynomial<Dual<K>>> sigma;
    for (std::size_t v = 0; v < 4; ++v) {
      Polynomial<K> shift(T);
      if (si / 4 == v) shift = var(T, curve_vars[si % 4]);
      sigma.push_back(detail::to_dual(var(T, curve_vars[v]), D, &shift));
    }
    std::vector<Polynomial<K>> dh;
    for (const auto& gj : g) dh.push_back(detail::eps_part(detail::to_dual(gj, D).substitute(sigma), T));
    auto da = P.solve(db.coordinates(dh));
    if (!da) throw AlignmentFailure("reparametrization leaves the printed family");
    for (std::size_t k = 0; k < 12; ++k) L(k, si) = (*da)[k];
    // phi(x) = x, phi(y) = y, phi(z) = 0, phi(w) = w, composed with sigma
    const std::vector<std::optional<std::string>> phi{"x", "y", std::nullopt, "w"};
    for (std::size_t pv = 0; pv < 4; ++pv) {
      if (!phi[pv]) continue;
      Polynomial<K> moved = detail::eps_part(detail::to_dual(var(T, *phi[pv]), D).substitute(sigma), T);
      for (std::size_t cv = 0; cv < 4; ++cv)
        L(12 + 4 * pv + cv, si) = moved.coefficient(Monomial::variable(4, T->require(curve_vars[cv])));
    }
  }

  rep.raw_count = 28;
  rep.action_rank = L.rank();
  rep.quotient_dimension = rep.raw_count - rep.action_rank;
  rep.invariant_basis = L.transpose().nullspace();

  rep.listed_functionals = detail::printed_functionals(proto);
  std::vector<std::vector<K>> rows;
  for (auto& f : rep.listed_functionals) {
    f.invariant = detail::annihilates(f.coeffs, L);
    rows.push_back(f.coeffs);
  }
  rep.listed_rank = rank_of(rows, 28, proto);
  bool all_invariant = std::all_of(rep.listed_functionals.begin(), rep.listed_functionals.end(),
                                   [](const Functional<K>& f) { return f.invariant; });
  rep.listed_span_matches = all_invariant && rep.listed_rank == rep.quotient_dimension;

  // try moving one coefficient of each failing functional to another parameter
  for (std::size_t fi = 0; fi < rep.listed_functionals.size(); ++fi) {
    const auto& f = rep.listed_functionals[fi];
    if (f.invariant) continue;
    for (std::size_t from = 0; from < 28; ++from) {
      if (f.coeffs[from].is_zero()) continue;
      for (std::size_t to = 0; to < 28; ++to) {
        if (to == from || !f.coeffs[to].is_zero()) continue;
        auto cand = f.coeffs;
        cand[to] = cand[from];
        cand[from] = zero_like(proto);
        if (!detail::annihilates(cand, L)) continue;
        auto trial = rows;
        trial[fi] = cand;
        if (rank_of(trial, 28, proto) == rep.quotient_dimension)
          rep.repairs.push_back({f.name, detail::functional_string(cand)});
      }
    }
  }
  return rep;
}

} // namespace cmtwist
