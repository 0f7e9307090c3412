#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/rational.hpp"
#include "cmtwist/scalars/upoly.hpp"

namespace cmtwist {

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
  using Poly = UPoly<Rational>;

  RationalFunction() : num_(Rational(0)), den_(Poly::constant(Rational(1))) {}
  RationalFunction(long n) : RationalFunction(Rational(n)) {}  // NOLINT
  explicit RationalFunction(const Rational& c) : num_(Poly::constant(c)), den_(Poly::constant(Rational(1))) {}
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroInversion("rational function with zero denominator");
    normalize();
  }

  static RationalFunction t() { return RationalFunction(Poly::monomial(Rational(1), 1), Poly::constant(Rational(1))); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.leading().is_one(); }

  RationalFunction inverse() const {
    if (is_zero()) throw ZeroInversion("inverse of 0 in Q(t)");
    return RationalFunction(den_, num_);
  }
  RationalFunction canonical() const { return *this; }

  /// Substitutes t = c; throws ExcludedParameter if the denominator vanishes.
  Rational eval(const Rational& c) const {
    Rational d = den_.eval(c);
    if (d.is_zero()) throw ExcludedParameter("denominator vanishes at t = " + c.to_string());
    return num_.eval(c) / d;
  }

  RationalFunction from_int(long n) const { return RationalFunction(Rational(n)); }
  RationalFunction from_rational(const Rational& q) const { return RationalFunction(q); }
  std::optional<RationalFunction> named_constant(std::string_view name) const {
    if (name == "t") return t();
    return std::nullopt;
  }
  std::string field_name() const { return "Q(t)"; }
  std::string to_string() const {
    if (den_.degree() == 0) return num_.to_string("t");
    std::string n = num_.to_string("t");
    if (num_.degree() > 0) n = "(" + n + ")";
    return n + "/(" + den_.to_string("t") + ")";
  }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroInversion("division by 0 in Q(t)");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  struct Normalized {};
  RationalFunction(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly::constant(Rational(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
      Poly s = Poly::constant(lc.inverse());
      num_ = num_ * s;
      den_ = den_ * s;
    }
  }

  Poly num_;
  Poly den_;
};

} // namespace cmtwist
