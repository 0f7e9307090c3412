#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/field.hpp"
#include "cmtwist/scalars/rational.hpp"

namespace cmtwist {

/// Dense univariate polynomial over a field, coefficients stored from the
/// constant term upward with no trailing zeros. The zero polynomial keeps a
/// prototype scalar so constants can be rebuilt in the right field.
template <Scalar K>
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(K proto) : proto_(zero_like(proto)) {}
  UPoly(std::vector<K> coeffs, K proto) : proto_(zero_like(proto)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const K& c) { return UPoly({c}, c); }
  static UPoly monomial(const K& c, int degree) {
    std::vector<K> v(static_cast<std::size_t>(degree) + 1, zero_like(c));
    v.back() = c;
    return UPoly(std::move(v), c);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : proto_; }
  K leading() const { return c_.empty() ? proto_ : c_.back(); }
  const K& prototype() const { return proto_; }

  K eval(const K& x) const {
    K acc = proto_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * proto_.from_int(static_cast<long>(i)));
    return UPoly(std::move(d), proto_);
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    K inv = leading().inverse();
    std::vector<K> v = c_;
    for (auto& x : v) x = x * inv;
    return UPoly(std::move(v), proto_);
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> v(std::max(a.c_.size(), b.c_.size()), a.proto_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UPoly(std::move(v), a.proto_);
  }
  UPoly operator-() const {
    std::vector<K> v = c_;
    for (auto& x : v) x = -x;
    return UPoly(std::move(v), proto_);
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.proto_);
    std::vector<K> v(a.c_.size() + b.c_.size() - 1, a.proto_);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(v), a.proto_);
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw ZeroInversion("univariate division by zero polynomial");
    UPoly q(proto_), r = *this;
    K inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      K c = r.leading() * inv;
      UPoly t = monomial(c, r.degree() - d.degree());
      q = q + t;
      r = r - t * d;
    }
    return {q, r};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UPoly squarefree_part() const {
    if (degree() <= 0) return monic();
    return divmod(gcd(*this, derivative())).first.monic();
  }

  /// Human-readable form, highest degree first, e.g. "t^2 - 1".
  std::string to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const K& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      SignedText st = split_sign(c.to_string());
      if (!out.empty()) out += st.negative ? " - " : " + ";
      else if (st.negative) out += "-";
      std::string cs = st.compound && i > 0 ? "(" + st.body + ")" : st.body;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (i == 0) out += cs;
      else if (cs == "1") out += mono;
      else out += cs + "*" + mono;
    }
    return out;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  K proto_{};
  std::vector<K> c_;
};

/// Rational roots of a nonzero polynomial over Q (rational root theorem on
/// the primitive integer multiple). Sorted ascending, without multiplicity.
inline std::vector<Rational> rational_roots(const UPoly<Rational>& f) {
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  UPoly<Rational> g = f;
  if (g.coeff(0).is_zero()) {
    roots.push_back(Rational(0));
    while (g.coeff(0).is_zero()) g = g.divmod(UPoly<Rational>::monomial(Rational(1), 1)).first;
  }
  if (g.degree() >= 1) {
    mpz_class l = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    mpq_class a0q = abs(g.coeff(0).value() * l), anq = abs(g.leading().value() * l);
    mpz_class a0 = a0q.get_num(), an = anq.get_num();
    auto divisors = [](mpz_class n) {
      std::vector<mpz_class> d;
      for (mpz_class i = 1; i * i <= n; ++i)
        if (n % i == 0) {
          d.push_back(i);
          if (i * i != n) d.push_back(n / i);
        }
      return d;
    };
    for (const auto& p : divisors(a0))
      for (const auto& q : divisors(an))
        for (int s : {1, -1}) {
          Rational cand(mpz_class(s * p), q);
          if (g.eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace cmtwist
