#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/rational.hpp"

namespace cmtwist {

/// Element of GF(p) for a prime p > 3. The modulus travels with the value.
class PrimeField {
public:
  PrimeField() = default;  // 0 in GF(5); only meaningful as a placeholder

  PrimeField(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
    check_modulus(modulus);
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    r_ = static_cast<std::uint64_t>(r);
  }

  static void check_modulus(std::uint32_t p) {
    if (p == 2 || p == 3)
      throw InvalidModulus("characteristic " + std::to_string(p) + " is not supported");
    if (p < 2) throw InvalidModulus("modulus must be a prime > 3");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw InvalidModulus(std::to_string(p) + " is not prime");
  }

  std::uint64_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  PrimeField inverse() const {
    if (r_ == 0) throw ZeroInversion("inverse of 0 in GF(" + std::to_string(p_) + ")");
    // Fermat: r^(p-2)
    std::uint64_t result = 1, base = r_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return raw(result, p_);
  }
  PrimeField canonical() const { return *this; }

  PrimeField from_int(long n) const { return PrimeField(n, p_); }
  PrimeField from_rational(const Rational& q) const {
    mpz_class m = p_;
    mpz_class num = q.numerator() % m;
    mpz_class den = q.denominator() % m;
    if (den == 0) throw ZeroInversion("denominator of " + q.to_string() + " vanishes mod " + std::to_string(p_));
    if (num < 0) num += m;
    return raw(num.get_ui(), p_) * raw(den.get_ui(), p_).inverse();
  }
  std::optional<PrimeField> named_constant(std::string_view) const { return std::nullopt; }
  std::string field_name() const { return "GF(" + std::to_string(p_) + ")"; }
  std::string to_string() const { return std::to_string(r_); }

  friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
    check_same(a, b);
    return raw((a.r_ + b.r_) % a.p_, a.p_);
  }
  friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
    check_same(a, b);
    return raw((a.r_ + a.p_ - b.r_) % a.p_, a.p_);
  }
  friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
    check_same(a, b);
    return raw(a.r_ * b.r_ % a.p_, a.p_);
  }
  friend PrimeField operator/(const PrimeField& a, const PrimeField& b) { return a * b.inverse(); }
  PrimeField operator-() const { return raw((p_ - r_) % p_, p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.r_ == b.r_ && a.p_ == b.p_; }

private:
  static PrimeField raw(std::uint64_t r, std::uint32_t p) {
    PrimeField f;
    f.r_ = r;
    f.p_ = p;
    return f;
  }
  static void check_same(const PrimeField& a, const PrimeField& b) {
    if (a.p_ != b.p_)
      throw ContextMismatch("GF(" + std::to_string(a.p_) + ") vs GF(" + std::to_string(b.p_) + ")");
  }

  std::uint64_t r_ = 0;
  std::uint32_t p_ = 5;
};

} // namespace cmtwist
