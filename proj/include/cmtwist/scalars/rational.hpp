#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cmtwist/error.hpp"

namespace cmtwist {

/// Element of Q backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integers convert implicitly
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw ZeroInversion("rational with zero denominator");
    v_.canonicalize();
  }

  static Rational parse(std::string_view text) {
    mpq_class v;
    if (v.set_str(std::string(text), 10) != 0)
      throw Error("SyntaxError", "bad rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw ZeroInversion("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational inverse() const {
    if (is_zero()) throw ZeroInversion("inverse of 0 in Q");
    return Rational(mpq_class(1) / v_);
  }
  Rational canonical() const { return *this; }

  Rational from_int(long n) const { return Rational(n); }
  Rational from_rational(const Rational& q) const { return q; }
  std::optional<Rational> named_constant(std::string_view) const { return std::nullopt; }
  std::string field_name() const { return "Q"; }
  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw ZeroInversion("division by 0 in Q");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  mpq_class v_{0};
};

} // namespace cmtwist
