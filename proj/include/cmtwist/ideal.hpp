#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/groebner.hpp"
#include "cmtwist/linalg.hpp"
#include "cmtwist/poly/polynomial.hpp"
#include "cmtwist/poly/ring_map.hpp"

namespace cmtwist {

/// Finitely generated ideal. Copies share one Groebner-basis cache, filled
/// lazily per monomial order.
template <Scalar K>
class Ideal {
public:
  explicit Ideal(RingPtr<K> ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens) : Ideal(std::move(ring)) {
    for (auto& g : gens) {
      require_same_ring(g.ring(), ring_);
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }
  Ideal(RingPtr<K> ring, std::initializer_list<Polynomial<K>> gens)
      : Ideal(std::move(ring), std::vector<Polynomial<K>>(gens)) {}

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const GroebnerBasis<K>& basis(const MonomialOrder& order = MonomialOrder::grevlex()) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order.name());
    if (it == cache_->bases.end())
      it = cache_->bases.emplace(order.name(), std::make_shared<const GroebnerBasis<K>>(buchberger(ring_, gens_, order))).first;
    return *it->second;
  }

  bool contains(const Polynomial<K>& f) const { return normal_form(f, basis()).is_zero(); }
  bool contains(const Ideal& other) const {
    require_same_ring(other.ring_, ring_);
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }
  bool is_unit() const { return basis().is_unit_ideal(); }
  bool is_homogeneous() const {
    for (const auto& g : gens_)
      if (!g.is_homogeneous()) return false;
    return true;
  }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    return a.basis().elements() == b.basis().elements();
  }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring_, b.ring_);
    std::vector<Polynomial<K>> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return Ideal(a.ring_, std::move(g));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
    return s + ")";
  }

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const GroebnerBasis<K>>> bases;
  };
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <Scalar K>
bool member(const Polynomial<K>& f, const Ideal<K>& I) {
  require_same_ring(f.ring(), I.ring());
  return I.contains(f);
}

template <Scalar K>
bool equal(const Ideal<K>& I, const Ideal<K>& J) {
  return I == J;
}

/// The ideal generated by the reduced basis; a canonical generating set.
template <Scalar K>
Ideal<K> reduced(const Ideal<K>& I, const MonomialOrder& order = MonomialOrder::grevlex()) {
  return Ideal<K>(I.ring(), I.basis(order).elements());
}

enum class EliminationMethod { Block, Lex };

namespace detail {

/// Reorders variables so the eliminated ones come first, computes a basis in
/// an elimination order, and keeps the elements free of them.
template <Scalar K>
std::vector<Polynomial<K>> eliminate_leading(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens,
                                             std::size_t count, EliminationMethod method,
                                             const InversionObserver<K>& observer = {}) {
  MonomialOrder ord = method == EliminationMethod::Lex ? MonomialOrder::lex()
                                                       : MonomialOrder::elimination(static_cast<int>(count));
  GroebnerBasis<K> gb = buchberger(ring, gens, ord, observer);
  std::vector<Polynomial<K>> kept;
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < count && free; ++v) free = !g.uses_variable(v);
    if (free) kept.push_back(g);
  }
  return kept;
}

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string n = base;
  while (std::find(taken.begin(), taken.end(), n) != taken.end()) n += "_";
  return n;
}

} // namespace detail

/// I ∩ k[keep]; the result lives in the same ring.
template <Scalar K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& keep,
                   EliminationMethod method = EliminationMethod::Block) {
  const auto& R = I.ring();
  std::vector<bool> kept(R->arity(), false);
  for (const auto& n : keep) kept[R->require(n)] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> to_work(R->arity());
  std::size_t count = 0;
  for (std::size_t i = 0; i < R->arity(); ++i)
    if (!kept[i]) count++;
  std::size_t a = 0, b = count;
  names.resize(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) {
    to_work[i] = kept[i] ? b++ : a++;
    names[to_work[i]] = R->name(i);
  }
  auto W = make_ring<K>(names, R->one());
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.reindex(W, to_work));
  std::vector<std::size_t> back(R->arity());
  for (std::size_t i = 0; i < R->arity(); ++i) back[to_work[i]] = i;
  std::vector<Polynomial<K>> out;
  for (const auto& g : detail::eliminate_leading(W, gens, count, method)) out.push_back(g.reindex(R, back));
  return Ideal<K>(R, std::move(out));
}

/// Kernel of source -> target -> target/I_target, via the graph ideal.
template <Scalar K>
Ideal<K> ring_map_kernel(const RingMap<K>& map, const Ideal<K>& target_ideal,
                         EliminationMethod method = EliminationMethod::Block,
                         const InversionObserver<K>& observer = {}) {
  require_same_ring(map.target(), target_ideal.ring());
  const auto& S = map.source();
  const auto& T = map.target();
  std::vector<std::string> names;
  for (const auto& n : T->names()) names.push_back(detail::fresh_name(S->names(), n + "'"));
  for (const auto& n : S->names()) names.push_back(n);
  auto G = make_ring<K>(names, S->one());
  std::vector<std::size_t> from_target(T->arity()), from_source(S->arity());
  for (std::size_t i = 0; i < T->arity(); ++i) from_target[i] = i;
  for (std::size_t i = 0; i < S->arity(); ++i) from_source[i] = T->arity() + i;

  std::vector<Polynomial<K>> gens;
  for (std::size_t i = 0; i < S->arity(); ++i)
    gens.push_back(Polynomial<K>::variable(G, from_source[i]) - map.image(i).reindex(G, from_target));
  for (const auto& g : target_ideal.generators()) gens.push_back(g.reindex(G, from_target));

  std::vector<Polynomial<K>> out;
  for (const auto& g : detail::eliminate_leading(G, gens, T->arity(), method, observer)) {
    std::vector<Term<K>> terms;
    for (const auto& t : g.terms()) {
      std::vector<int> e(S->arity(), 0);
      for (std::size_t i = 0; i < S->arity(); ++i) e[i] = t.mono[from_source[i]];
      terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    out.push_back(Polynomial<K>(S, std::move(terms)));
  }
  // the surviving elements already form the reduced grevlex basis of the kernel
  if (method == EliminationMethod::Lex) return reduced(Ideal<K>(S, std::move(out)));
  return Ideal<K>(S, std::move(out));
}

namespace detail {

template <Scalar K>
RingPtr<K> with_leading_variable(const RingPtr<K>& R, const std::string& base) {
  std::vector<std::string> names{fresh_name(R->names(), base)};
  names.insert(names.end(), R->names().begin(), R->names().end());
  return make_ring<K>(names, R->one());
}

template <Scalar K>
std::vector<std::size_t> shift_map(const RingPtr<K>& R) {
  std::vector<std::size_t> m(R->arity());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = i + 1;
  return m;
}

template <Scalar K>
Polynomial<K> drop_leading_variable(const Polynomial<K>& g, const RingPtr<K>& R) {
  std::vector<Term<K>> terms;
  for (const auto& t : g.terms()) {
    std::vector<int> e(t.mono.exponents().begin() + 1, t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<K>(R, std::move(terms));
}

} // namespace detail

template <Scalar K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& R = I.ring();
  auto W = detail::with_leading_variable(R, "T");
  auto shift = detail::shift_map(R);
  Polynomial<K> T = Polynomial<K>::variable(W, 0);
  Polynomial<K> one_minus_T = Polynomial<K>::constant(W, 1) - T;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(T * g.reindex(W, shift));
  for (const auto& g : J.generators()) gens.push_back(one_minus_T * g.reindex(W, shift));
  std::vector<Polynomial<K>> out;
  for (const auto& g : detail::eliminate_leading(W, gens, 1, EliminationMethod::Block))
    out.push_back(detail::drop_leading_variable(g, R));
  return reduced(Ideal<K>(R, std::move(out)));
}

/// g / f when f divides g exactly.
template <Scalar K>
Polynomial<K> divide_exact(const Polynomial<K>& g, const Polynomial<K>& f) {
  if (f.is_zero()) throw ZeroDivisorArg("division by 0");
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<detail::TermList<K>> basis{detail::make_monic<K>(detail::sorted_terms(f, ord), nullptr)};
  detail::Reducer<K> red{basis, ord};
  std::vector<Polynomial<K>> q;
  auto rem = red.reduce(detail::sorted_terms(g, ord), &q, g.ring());
  if (!rem.empty()) throw InexactDivision(f.to_string() + " does not divide " + g.to_string());
  return q[0] * f.leading_term(ord).coeff.inverse();
}

/// (I : f) = {g : g f ∈ I}, from I ∩ (f).
template <Scalar K>
Ideal<K> colon(const Ideal<K>& I, const Polynomial<K>& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw ZeroDivisorArg("colon by the zero polynomial");
  Ideal<K> meet = intersect(I, Ideal<K>(I.ring(), {f}));
  std::vector<Polynomial<K>> out;
  for (const auto& g : meet.generators()) out.push_back(divide_exact(g, f));
  return reduced(Ideal<K>(I.ring(), std::move(out)));
}

/// (I : f^∞) by iterated colon.
template <Scalar K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  Ideal<K> cur = reduced(I);
  for (;;) {
    Ideal<K> next = colon(cur, f);
    if (next == cur) return cur;
    cur = next;
  }
}

/// (I : J^∞) as the intersection of the saturations by the generators of J.
template <Scalar K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw ZeroDivisorArg("saturation by the zero ideal");
  std::optional<Ideal<K>> acc;
  for (const auto& f : J.generators()) {
    Ideal<K> s = saturate(I, f);
    acc = acc ? intersect(*acc, s) : s;
  }
  return *acc;
}

/// Saturation with respect to the ideal of all variables.
template <Scalar K>
Ideal<K> saturate_irrelevant(const Ideal<K>& I) {
  std::vector<Polynomial<K>> vars;
  for (std::size_t i = 0; i < I.ring()->arity(); ++i) vars.push_back(Polynomial<K>::variable(I.ring(), i));
  return saturate(I, Ideal<K>(I.ring(), std::move(vars)));
}

/// Rabinowitsch: f ∈ √I iff 1 ∈ I + (1 − T f).
template <Scalar K>
bool radical_member(const Polynomial<K>& f, const Ideal<K>& I) {
  require_same_ring(I.ring(), f.ring());
  const auto& R = I.ring();
  auto W = detail::with_leading_variable(R, "T");
  auto shift = detail::shift_map(R);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators()) gens.push_back(g.reindex(W, shift));
  gens.push_back(Polynomial<K>::constant(W, 1) - Polynomial<K>::variable(W, 0) * f.reindex(W, shift));
  return buchberger(W, gens).is_unit_ideal();
}

/// Linear change of coordinates acting on ideals: g ↦ g∘M⁻¹, so that the
/// zero set moves by p ↦ M p.
template <Scalar K>
RingMap<K> linear_substitution(const RingPtr<K>& R, const Matrix<K>& A) {
  if (A.rows() != R->arity() || A.cols() != R->arity()) throw ContextMismatch("matrix size does not match ring");
  std::vector<Polynomial<K>> images;
  for (std::size_t i = 0; i < R->arity(); ++i) {
    Polynomial<K> im(R);
    for (std::size_t j = 0; j < R->arity(); ++j)
      if (!A(i, j).is_zero()) im += Polynomial<K>::variable(R, j) * A(i, j);
    images.push_back(im);
  }
  return RingMap<K>(R, R, std::move(images));
}

template <Scalar K>
Ideal<K> pgl_transform(const Ideal<K>& I, const Matrix<K>& M) {
  if (M.determinant().is_zero()) throw SingularMatrix("projective transform must be invertible");
  RingMap<K> sub = linear_substitution(I.ring(), M.inverse());
  std::vector<Polynomial<K>> out;
  for (const auto& g : I.generators()) out.push_back(sub(g));
  return Ideal<K>(I.ring(), std::move(out));
}

template <Scalar K>
std::vector<K> transform_point(const Matrix<K>& M, const std::vector<K>& p) {
  return M.apply(p);
}

} // namespace cmtwist
