#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/linalg.hpp"
#include "cmtwist/poly/polynomial.hpp"

namespace cmtwist {

/// Called with every leading coefficient the engine inverts. Parametric
/// computations over Q(t) use it to record where specialization is unsafe.
template <Scalar K>
using InversionObserver = std::function<void(const K&)>;

/// Reduced Groebner basis: monic elements sorted by ascending leading
/// monomial, so two bases of the same ideal and order compare equal.
template <Scalar K>
class GroebnerBasis {
public:
  GroebnerBasis(RingPtr<K> ring, MonomialOrder order, std::vector<Polynomial<K>> elems, bool reduced)
      : ring_(std::move(ring)), order_(order), elems_(std::move(elems)), reduced_(reduced) {
    for (const auto& g : elems_) leads_.push_back(g.leading_term(order_).mono);
  }

  const RingPtr<K>& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<K>>& elements() const { return elems_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elems_.size(); }
  bool reduced() const { return reduced_; }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elems_ == b.elems_;
  }

private:
  RingPtr<K> ring_;
  MonomialOrder order_;
  std::vector<Polynomial<K>> elems_;
  std::vector<Monomial> leads_;
  bool reduced_;
};

/// Relation tuples among a fixed generator list.
template <Scalar K>
struct SyzygyBasis {
  std::vector<Polynomial<K>> generators;
  std::vector<std::vector<Polynomial<K>>> syzygies;

  /// Degree of a homogeneous syzygy: deg(entry) + deg(generator).
  static int degree_of(const std::vector<Polynomial<K>>& syz, const std::vector<Polynomial<K>>& gens) {
    for (std::size_t i = 0; i < syz.size(); ++i)
      if (!syz[i].is_zero()) return syz[i].degree() + gens[i].degree();
    return -1;
  }
};

namespace detail {

template <Scalar K>
using TermList = std::vector<Term<K>>;

template <Scalar K>
struct OrderDesc {
  MonomialOrder ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord.greater(a, b); }
};

template <Scalar K>
TermList<K> sorted_terms(const Polynomial<K>& p, const MonomialOrder& ord) {
  TermList<K> t = p.terms();
  std::sort(t.begin(), t.end(), [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.mono, b.mono); });
  return t;
}

/// Working polynomial during a reduction, ordered by the active order.
template <Scalar K>
class Accumulator {
public:
  explicit Accumulator(const MonomialOrder& ord) : terms_(OrderDesc<K>{ord}) {}

  void add(const Monomial& m, const K& c) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
      terms_.erase(it);
    }
  }
  void add_multiple(const TermList<K>& g, const Monomial& m, const K& c) {
    for (const auto& t : g) add(t.mono * m, t.coeff * c);
  }
  bool empty() const { return terms_.empty(); }
  std::pair<Monomial, K> pop_leading() {
    auto it = terms_.begin();
    std::pair<Monomial, K> out{it->first, it->second};
    terms_.erase(it);
    return out;
  }

private:
  std::map<Monomial, K, OrderDesc<K>> terms_;
};

template <Scalar K>
struct Reducer {
  const std::vector<TermList<K>>& basis;  // each monic, sorted by the order
  const MonomialOrder& ord;

  std::optional<std::size_t> find_divisor(const Monomial& m) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].front().mono.divides(m)) return i;
    return std::nullopt;
  }

  /// Full reduction. If `quotients` is non-null it receives q_i with
  /// f = sum q_i * basis_i + remainder.
  TermList<K> reduce(const TermList<K>& f, std::vector<Polynomial<K>>* quotients, const RingPtr<K>& ring) const {
    Accumulator<K> acc(ord);
    for (const auto& t : f) acc.add(t.mono, t.coeff);
    std::vector<TermList<K>> q;
    if (quotients) q.resize(basis.size());
    TermList<K> rem;
    while (!acc.empty()) {
      auto [m, c] = acc.pop_leading();
      auto d = find_divisor(m);
      if (!d) {
        rem.push_back({m, c});
        continue;
      }
      const TermList<K>& g = basis[*d];
      Monomial shift = m / g.front().mono;
      for (std::size_t k = 1; k < g.size(); ++k) acc.add(g[k].mono * shift, -(g[k].coeff * c));
      if (quotients) q[*d].push_back({shift, c});
    }
    if (quotients) {
      quotients->clear();
      for (auto& terms : q) quotients->push_back(Polynomial<K>(ring, std::move(terms)));
    }
    return rem;
  }
};

template <Scalar K>
TermList<K> make_monic(TermList<K> t, const InversionObserver<K>* obs) {
  if (t.empty() || t.front().coeff.is_one()) return t;
  if (obs && *obs) (*obs)(t.front().coeff);
  K inv = t.front().coeff.inverse();
  for (auto& x : t) x.coeff = x.coeff * inv;
  return t;
}

/// Buchberger with the coprime and chain criteria, normal selection
/// strategy (smallest lcm degree, ties by pair position). When `reps` is
/// non-null, reps[i] expresses basis element i in the input generators.
template <Scalar K>
std::vector<TermList<K>> buchberger_core(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                                         const MonomialOrder& ord, const InversionObserver<K>* obs,
                                         std::vector<std::vector<Polynomial<K>>>* reps) {
  const std::size_t ngens = gens.size();
  std::vector<TermList<K>> G;
  std::vector<std::vector<Polynomial<K>>> R;  // representations, parallel to G

  auto unit_rep = [&](std::size_t k, const K& scale) {
    std::vector<Polynomial<K>> r(ngens, Polynomial<K>(ring));
    r[k] = Polynomial<K>::constant(ring, scale);
    return r;
  };
  auto scale_rep = [&](std::vector<Polynomial<K>>& r, const K& c) {
    for (auto& p : r) p = p * c;
  };

  for (std::size_t k = 0; k < ngens; ++k) {
    require_same_ring(gens[k].ring(), ring);
    if (gens[k].is_zero()) continue;
    TermList<K> t = sorted_terms(gens[k], ord);
    K lc = t.front().coeff;
    G.push_back(make_monic(std::move(t), obs));
    if (reps) R.push_back(unit_rep(k, lc.inverse()));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.push_back({i, j, lcm(G[i].front().mono, G[j].front().mono)});

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pending)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (it->lcm.degree() < best->lcm.degree() ||
          (it->lcm.degree() == best->lcm.degree() && (it->j < best->j || (it->j == best->j && it->i < best->i))))
        best = it;
    }
    Pair pr = *best;
    pending.erase(best);

    const Monomial& li = G[pr.i].front().mono;
    const Monomial& lj = G[pr.j].front().mono;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (G[k].front().mono.divides(pr.lcm) && !is_pending(pr.i, k) && !is_pending(pr.j, k)) chain = true;
    }
    if (chain) continue;

    Monomial mi = pr.lcm / li, mj = pr.lcm / lj;
    TermList<K> s;
    {
      Accumulator<K> acc(ord);
      acc.add_multiple(G[pr.i], mi, ring->one());
      acc.add_multiple(G[pr.j], mj, -ring->one());
      while (!acc.empty()) {
        auto [m, c] = acc.pop_leading();
        s.push_back({m, c});
      }
    }
    if (s.empty()) continue;
    Reducer<K> red{G, ord};
    std::vector<Polynomial<K>> q;
    TermList<K> r = red.reduce(s, reps ? &q : nullptr, ring);
    if (r.empty()) continue;

    K lc = r.front().coeff;
    if (reps) {
      // r = mi*G_i - mj*G_j - sum q_l G_l, then scaled by 1/lc
      std::vector<Polynomial<K>> rep(ngens, Polynomial<K>(ring));
      Polynomial<K> pmi = Polynomial<K>::monomial(ring, mi, ring->one());
      Polynomial<K> pmj = Polynomial<K>::monomial(ring, mj, ring->one());
      for (std::size_t k = 0; k < ngens; ++k) {
        rep[k] = pmi * R[pr.i][k] - pmj * R[pr.j][k];
        for (std::size_t l = 0; l < q.size(); ++l)
          if (!q[l].is_zero()) rep[k] -= q[l] * R[l][k];
      }
      scale_rep(rep, lc.inverse());
      R.push_back(std::move(rep));
    }
    G.push_back(make_monic(std::move(r), obs));
    std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.push_back({k, n, lcm(G[k].front().mono, G[n].front().mono)});
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(G.size(), true);
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& a = G[i].front().mono;
      const Monomial& b = G[j].front().mono;
      if (b.divides(a) && (!(a == b) || j < i)) keep[i] = false;
    }
  std::vector<TermList<K>> M;
  std::vector<std::vector<Polynomial<K>>> MR;
  for (std::size_t i = 0; i < G.size(); ++i)
    if (keep[i]) {
      M.push_back(G[i]);
      if (reps) MR.push_back(R[i]);
    }

  // Tail-reduce each element against the others.
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<TermList<K>> others;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) {
        others.push_back(M[j]);
        idx.push_back(j);
      }
    Reducer<K> red{others, ord};
    TermList<K> tail(M[i].begin() + 1, M[i].end());
    std::vector<Polynomial<K>> q;
    TermList<K> r = red.reduce(tail, reps ? &q : nullptr, ring);
    TermList<K> out{M[i].front()};
    out.insert(out.end(), r.begin(), r.end());
    if (reps)
      for (std::size_t l = 0; l < q.size(); ++l)
        if (!q[l].is_zero())
          for (std::size_t k = 0; k < ngens; ++k) MR[i][k] -= q[l] * MR[idx[l]][k];
    M[i] = std::move(out);
  }

  std::vector<std::size_t> perm(M.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return ord.less(M[a].front().mono, M[b].front().mono); });
  std::vector<TermList<K>> out;
  for (auto p : perm) out.push_back(M[p]);
  if (reps) {
    reps->clear();
    for (auto p : perm) reps->push_back(MR[p]);
  }
  return out;
}

template <Scalar K>
std::vector<TermList<K>> basis_terms(const GroebnerBasis<K>& gb) {
  std::vector<TermList<K>> out;
  for (const auto& g : gb.elements()) out.push_back(sorted_terms(g, gb.order()));
  return out;
}

} // namespace detail

template <Scalar K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order = MonomialOrder::grevlex(),
                            const InversionObserver<K>& observer = {}) {
  auto terms = detail::buchberger_core<K>(ring, gens, order, observer ? &observer : nullptr, nullptr);
  std::vector<Polynomial<K>> elems;
  for (auto& t : terms) elems.push_back(Polynomial<K>(ring, std::move(t)));
  return GroebnerBasis<K>(ring, order, std::move(elems), true);
}

template <Scalar K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (gens.empty()) throw ContextMismatch("empty generator list has no ring; pass it explicitly");
  return buchberger(gens.front().ring(), gens, order);
}

/// Unique remainder of f modulo the basis.
template <Scalar K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  require_same_ring(f.ring(), gb.ring());
  auto basis = detail::basis_terms(gb);
  detail::Reducer<K> red{basis, gb.order()};
  return Polynomial<K>(gb.ring(), red.reduce(detail::sorted_terms(f, gb.order()), nullptr, gb.ring()));
}

/// Groebner basis with each element expressed in the input generators.
template <Scalar K>
struct TrackedBasis {
  GroebnerBasis<K> basis;
  std::vector<Polynomial<K>> generators;
  std::vector<std::vector<Polynomial<K>>> representation;  // basis_i = sum_k rep[i][k] * gen_k
};

template <Scalar K>
TrackedBasis<K> tracked_buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                                   const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<std::vector<Polynomial<K>>> reps;
  auto terms = detail::buchberger_core<K>(ring, gens, order, nullptr, &reps);
  std::vector<Polynomial<K>> elems;
  for (auto& t : terms) elems.push_back(Polynomial<K>(ring, std::move(t)));
  return {GroebnerBasis<K>(ring, order, std::move(elems), true), gens, std::move(reps)};
}

/// Cofactors c with f = sum c_k * gen_k, or nullopt when f is not in the ideal.
template <Scalar K>
std::optional<std::vector<Polynomial<K>>> lift(const Polynomial<K>& f, const TrackedBasis<K>& tb) {
  auto basis = detail::basis_terms(tb.basis);
  detail::Reducer<K> red{basis, tb.basis.order()};
  std::vector<Polynomial<K>> q;
  auto rem = red.reduce(detail::sorted_terms(f, tb.basis.order()), &q, tb.basis.ring());
  if (!rem.empty()) return std::nullopt;
  std::vector<Polynomial<K>> c(tb.generators.size(), Polynomial<K>(tb.basis.ring()));
  for (std::size_t l = 0; l < q.size(); ++l)
    if (!q[l].is_zero())
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += q[l] * tb.representation[l][k];
  return c;
}

namespace detail {

/// Coefficient vector of a graded tuple, indexed by (component, monomial).
template <Scalar K>
std::vector<K> flatten_tuple(const std::vector<Polynomial<K>>& tuple, std::map<std::pair<std::size_t, Monomial>, std::size_t,
                                                                                  std::function<bool(const std::pair<std::size_t, Monomial>&, const std::pair<std::size_t, Monomial>&)>>& index,
                             const K& proto) {
  std::vector<std::pair<std::size_t, K>> entries;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (const auto& t : tuple[i].terms()) {
      auto key = std::make_pair(i, t.mono);
      auto it = index.find(key);
      if (it == index.end()) it = index.emplace(key, index.size()).first;
      entries.push_back({it->second, t.coeff});
    }
  std::vector<K> v(index.size(), zero_like(proto));
  for (auto& [k, c] : entries) v[k] = c;
  return v;
}

} // namespace detail

/// Generating syzygies of the given generators: S-pair relations of a
/// tracked Groebner basis and the generator re-expressions, pushed back to
/// the input generators, then trimmed to a minimal set degree by degree
/// (homogeneous input).
template <Scalar K>
SyzygyBasis<K> syzygy_basis(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order = MonomialOrder::grevlex()) {
  for (const auto& g : gens) {
    require_same_ring(g.ring(), ring);
    if (g.is_zero()) throw ZeroDivisorArg("syzygy generators must be nonzero");
    if (!g.is_homogeneous()) throw NotHomogeneous(g.to_string());
  }
  const std::size_t n = gens.size();
  TrackedBasis<K> tb = tracked_buchberger(ring, gens, order);
  const auto& G = tb.basis.elements();
  auto basis = detail::basis_terms(tb.basis);
  detail::Reducer<K> red{basis, order};

  auto to_gens = [&](const std::vector<Polynomial<K>>& over_basis) {
    std::vector<Polynomial<K>> out(n, Polynomial<K>(ring));
    for (std::size_t l = 0; l < over_basis.size(); ++l)
      if (!over_basis[l].is_zero())
        for (std::size_t k = 0; k < n; ++k) out[k] += over_basis[l] * tb.representation[l][k];
    return out;
  };

  std::vector<std::vector<Polynomial<K>>> candidates;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = tb.basis.leading_monomials()[i];
      const Monomial& lj = tb.basis.leading_monomials()[j];
      Monomial l = lcm(li, lj);
      Polynomial<K> s = G[i].mul_term(l / li, ring->one()) - G[j].mul_term(l / lj, ring->one());
      std::vector<Polynomial<K>> q;
      auto rem = red.reduce(detail::sorted_terms(s, order), &q, ring);
      if (!rem.empty()) throw Error("InternalError", "S-polynomial of a Groebner basis did not reduce to 0");
      std::vector<Polynomial<K>> over_basis = q;
      for (auto& p : over_basis) p = -p;
      over_basis[i] += Polynomial<K>::monomial(ring, l / li, ring->one());
      over_basis[j] -= Polynomial<K>::monomial(ring, l / lj, ring->one());
      candidates.push_back(to_gens(over_basis));
    }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Polynomial<K>> q;
    auto rem = red.reduce(detail::sorted_terms(gens[k], order), &q, ring);
    if (!rem.empty()) throw Error("InternalError", "generator not reduced to 0 by its own basis");
    std::vector<Polynomial<K>> syz = to_gens(q);
    for (auto& p : syz) p = -p;
    syz[k] += Polynomial<K>::constant(ring, 1);
    candidates.push_back(std::move(syz));
  }

  // Every candidate is homogeneous of a single degree; keep only those not
  // generated by previously kept ones (checked in the graded piece).
  std::vector<std::pair<int, std::vector<Polynomial<K>>>> graded;
  for (auto& c : candidates) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Polynomial<K>& p) { return p.is_zero(); });
    if (zero) continue;
    graded.push_back({SyzygyBasis<K>::degree_of(c, gens), std::move(c)});
  }
  std::stable_sort(graded.begin(), graded.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  SyzygyBasis<K> out{gens, {}};
  std::vector<int> kept_degree;
  for (auto& [d, syz] : graded) {
    using Key = std::pair<std::size_t, Monomial>;
    std::function<bool(const Key&, const Key&)> less = [](const Key& a, const Key& b) {
      if (a.first != b.first) return a.first < b.first;
      return MonomialOrder::lex().less(a.second, b.second);
    };
    std::map<Key, std::size_t, std::function<bool(const Key&, const Key&)>> index(less);
    std::vector<std::vector<K>> span;
    for (std::size_t s = 0; s < out.syzygies.size(); ++s) {
      int shift = d - kept_degree[s];
      for (const auto& m : monomials_of_degree(ring->arity(), shift)) {
        std::vector<Polynomial<K>> mult;
        for (const auto& p : out.syzygies[s]) mult.push_back(p.mul_term(m, ring->one()));
        span.push_back(detail::flatten_tuple(mult, index, ring->one()));
      }
    }
    std::vector<K> cand = detail::flatten_tuple(syz, index, ring->one());
    for (auto& v : span) v.resize(index.size(), ring->zero());
    std::size_t r0 = rank_of(span, index.size(), ring->one());
    span.push_back(cand);
    if (rank_of(span, index.size(), ring->one()) > r0) {
      out.syzygies.push_back(std::move(syz));
      kept_degree.push_back(d);
    }
  }

  for (const auto& syz : out.syzygies) {
    Polynomial<K> sum(ring);
    for (std::size_t k = 0; k < n; ++k) sum += syz[k] * gens[k];
    if (!sum.is_zero()) throw Error("InternalError", "syzygy does not annihilate the generators");
  }
  return out;
}

} // namespace cmtwist
