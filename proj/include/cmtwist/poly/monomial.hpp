#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace cmtwist {

/// Exponent vector with cached total degree.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : e_(arity, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) deg_ += x;
  }

  static Monomial variable(std::size_t arity, std::size_t index, int power = 1) {
    Monomial m(arity);
    m.e_[index] = power;
    m.deg_ = power;
    return m;
  }

  std::size_t arity() const { return e_.size(); }
  int degree() const { return deg_; }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }
  bool is_one() const { return deg_ == 0; }

  int block_degree(std::size_t begin, std::size_t end) const {
    int d = 0;
    for (std::size_t i = begin; i < end; ++i) d += e_[i];
    return d;
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  /// Exact quotient; caller guarantees `d.divides(*this)`.
  Monomial operator/(const Monomial& d) const {
    Monomial q = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] -= d.e_[i];
    q.deg_ -= d.deg_;
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial p = a;
    for (std::size_t i = 0; i < a.e_.size(); ++i) p.e_[i] += b.e_[i];
    p.deg_ += b.deg_;
    return p;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (int x : e_) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }

private:
  std::vector<int> e_;
  int deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of the given total degree in `arity` variables, in
/// lexicographic exponent order (x0 highest first).
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(arity, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (arity == 0) {
      if (left == 0) out.emplace_back(e);
      return;
    }
    if (i + 1 == arity) {
      e[i] = left;
      out.emplace_back(e);
      e[i] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  return out;
}

} // namespace cmtwist
