#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/poly/monomial.hpp"
#include "cmtwist/poly/order.hpp"
#include "cmtwist/poly/ring.hpp"

namespace cmtwist {

template <Scalar K>
struct Term {
  Monomial mono;
  K coeff;
  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

struct Grading {
  bool homogeneous = true;
  std::optional<int> degree;
};

/// Sparse polynomial over a ring context. Terms are nonzero and sorted
/// descending in grevlex, so equal polynomials have equal term vectors.
template <Scalar K>
class Polynomial {
public:
  using scalar_type = K;

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Normalizes: merges duplicates, drops zeros, sorts.
  Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms) : ring_(std::move(ring)) {
    std::map<Monomial, K, Desc> acc{Desc{}};
    for (auto& t : terms) {
      if (t.mono.arity() != ring_->arity()) throw ContextMismatch("term arity does not match ring");
      auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
      if (!inserted) it->second = it->second + t.coeff;
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.push_back({m, c});
  }

  static Polynomial constant(const RingPtr<K>& ring, const K& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->arity()), c});
    return p;
  }
  static Polynomial constant(const RingPtr<K>& ring, long n) { return constant(ring, ring->scalar(n)); }
  static Polynomial variable(const RingPtr<K>& ring, std::size_t i, int power = 1) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->arity(), i, power), ring->one()});
    return p;
  }
  static Polynomial variable(const RingPtr<K>& ring, const std::string& name, int power = 1) {
    return variable(ring, ring->require(name), power);
  }
  static Polynomial monomial(const RingPtr<K>& ring, const Monomial& m, const K& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return ring_->zero();
  }
  K constant_term() const { return coefficient(Monomial(ring_->arity())); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  Grading grading() const {
    Grading g;
    for (const auto& t : terms_) {
      if (!g.degree) g.degree = t.mono.degree();
      else if (*g.degree != t.mono.degree()) {
        g.homogeneous = false;
        g.degree.reset();
        return g;
      }
    }
    return g;
  }
  bool is_homogeneous() const { return grading().homogeneous; }

  /// Homogeneous component of the given degree.
  Polynomial part(int d) const {
    Polynomial p(ring_);
    for (const auto& t : terms_)
      if (t.mono.degree() == d) p.terms_.push_back(t);
    return p;
  }

  bool uses_variable(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.mono[i] > 0) return true;
    return false;
  }

  const Term<K>& leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("ZeroPolynomial", "leading term of 0");
    const Term<K>* best = &terms_[0];
    for (const auto& t : terms_)
      if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
  }

  Polynomial monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return *this * leading_term(ord).coeff.inverse();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }
  friend Polynomial operator*(const Polynomial& a, const K& c) {
    Polynomial p(a.ring_);
    if (c.is_zero()) return p;
    for (const auto& t : a.terms_) {
      K v = t.coeff * c;
      if (!v.is_zero()) p.terms_.push_back({t.mono, v});
    }
    return p;
  }
  friend Polynomial operator*(const K& c, const Polynomial& a) { return a * c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    std::map<Monomial, K, Desc> acc{Desc{}};
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto [it, inserted] = acc.try_emplace(s.mono * t.mono, s.coeff * t.coeff);
        if (!inserted) it->second = it->second + s.coeff * t.coeff;
      }
    Polynomial p(a.ring_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial mul_term(const Monomial& m, const K& c) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    for (const auto& t : terms_) {
      K v = t.coeff * c;
      if (!v.is_zero()) p.terms_.push_back({t.mono * m, v});
    }
    return p;  // multiplication by a monomial preserves grevlex order
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(ring_, 1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.terms_.empty()) return true;
    return a.ring_ == b.ring_ || a.ring_->same_as(*b.ring_);
  }

  Polynomial partial_derivative(std::size_t v) const {
    if (v >= ring_->arity()) throw UnknownVariable("variable index " + std::to_string(v));
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      if (t.mono[v] == 0) continue;
      std::vector<int> e = t.mono.exponents();
      K c = t.coeff * ring_->scalar(e[v]);
      --e[v];
      out.push_back({Monomial(std::move(e)), c});
    }
    return Polynomial(ring_, std::move(out));
  }
  Polynomial partial_derivative(const std::string& v) const { return partial_derivative(ring_->require(v)); }

  K evaluate(const std::vector<K>& point) const {
    if (point.size() != ring_->arity()) throw ContextMismatch("point has wrong number of coordinates");
    K acc = ring_->zero();
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i)
        for (int k = 0; k < t.mono[i]; ++k) v = v * point[i];
      acc = acc + v;
    }
    return acc;
  }

  /// Ring-map substitution: variable i -> images[i], all images in one ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->arity()) throw ContextMismatch("substitution needs one image per variable");
    if (images.empty()) return *this;
    const RingPtr<K>& target = images[0].ring_;
    Polynomial acc(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
      return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& t : terms_) {
      Polynomial v = constant(target, t.coeff);
      for (std::size_t i = 0; i < images.size(); ++i)
        if (t.mono[i] > 0) v *= power(i, t.mono[i]);
      acc += v;
    }
    return acc;
  }

  /// Sets variable v to 1 and drops it from the context.
  Polynomial dehomogenize(std::size_t v, const RingPtr<K>& target) const {
    if (v >= ring_->arity()) throw UnknownVariable("variable index " + std::to_string(v));
    if (target->arity() + 1 != ring_->arity()) throw ContextMismatch("dehomogenize target arity");
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      std::vector<int> e = t.mono.exponents();
      e.erase(e.begin() + static_cast<std::ptrdiff_t>(v));
      out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Inverse of dehomogenize: pads every term to total degree `deg()` with
  /// the new variable inserted at position v of `target`.
  Polynomial homogenize(std::size_t v, const RingPtr<K>& target) const {
    if (target->arity() != ring_->arity() + 1) throw ContextMismatch("homogenize target arity");
    int d = degree();
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      std::vector<int> e = t.mono.exponents();
      e.insert(e.begin() + static_cast<std::ptrdiff_t>(v), d - t.mono.degree());
      out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Re-embeds into another ring: variable i goes to variable index_map[i].
  Polynomial reindex(const RingPtr<K>& target, const std::vector<std::size_t>& index_map) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      std::vector<int> e(target->arity(), 0);
      for (std::size_t i = 0; i < index_map.size(); ++i) e[index_map[i]] += t.mono[i];
      out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Same variables, coefficients mapped into another scalar type.
  template <class L, class F>
  Polynomial<L> map_coefficients(const RingPtr<L>& target, F&& f) const {
    std::vector<Term<L>> out;
    for (const auto& t : terms_) out.push_back({t.mono, f(t.coeff)});
    return Polynomial<L>(target, std::move(out));
  }

  /// Terms printed in descending `ord` order, e.g. `y*u - x^2`.
  std::string to_string(const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    if (terms_.empty()) return "0";
    std::vector<const Term<K>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [&](auto* a, auto* b) { return ord.greater(a->mono, b->mono); });
    std::string out;
    for (const Term<K>* t : ts) {
      SignedText st = split_sign(t->coeff.to_string());
      if (!out.empty()) out += st.negative ? " - " : " + ";
      else if (st.negative) out += "-";
      std::string mono = monomial_string(t->mono);
      if (mono.empty()) out += st.body;
      else if (st.body == "1") out += mono;
      else out += (st.compound ? "(" + st.body + ")" : st.body) + "*" + mono;
    }
    return out;
  }

  std::string monomial_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring_->name(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

private:
  struct Desc {
    bool operator()(const Monomial& a, const Monomial& b) const { return MonomialOrder::grevlex().greater(a, b); }
  };

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial p(a.ring_);
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    const auto ord = MonomialOrder::grevlex();
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && ord.greater(a.terms_[i].mono, b.terms_[j].mono))) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || ord.greater(b.terms_[j].mono, a.terms_[i].mono)) {
        const auto& t = b.terms_[j++];
        p.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        K c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) p.terms_.push_back({a.terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    return p;
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Shorthand for building polynomials in tests and tables.
template <Scalar K>
Polynomial<K> var(const RingPtr<K>& ring, const std::string& name) {
  return Polynomial<K>::variable(ring, name);
}

} // namespace cmtwist
