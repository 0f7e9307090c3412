#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/field.hpp"

namespace cmtwist {

/// c0 + c1*eps over a field F, with eps^2 = 0. Units are exactly the
/// elements with c0 != 0.
template <Scalar F>
class Dual {
public:
  Dual() = default;
  explicit Dual(F c0) : c0_(c0), c1_(zero_like(c0)) {}
  Dual(F c0, F c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static Dual eps(const F& proto) { return Dual(zero_like(proto), one_like(proto)); }

  const F& real() const { return c0_; }
  const F& infinitesimal() const { return c1_; }

  bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
  bool is_one() const { return c0_.is_one() && c1_.is_zero(); }

  Dual inverse() const {
    if (c0_.is_zero()) throw DualNotInvertible("eps-multiple " + to_string() + " is not a unit");
    F inv = c0_.inverse();
    return Dual(inv, -(c1_ * inv * inv));
  }
  Dual canonical() const { return *this; }

  Dual from_int(long n) const { return Dual(c0_.from_int(n)); }
  Dual from_rational(const Rational& q) const { return Dual(c0_.from_rational(q)); }
  std::optional<Dual> named_constant(std::string_view name) const {
    if (name == "eps") return eps(c0_);
    if (auto c = c0_.named_constant(name)) return Dual(*c);
    return std::nullopt;
  }
  std::string field_name() const { return c0_.field_name() + "[eps]"; }
  std::string to_string() const {
    if (c1_.is_zero()) return c0_.to_string();
    SignedText e = split_sign(c1_.to_string());
    std::string body = e.compound ? "(" + e.body + ")" : e.body;
    std::string eps_part = body == "1" ? "eps" : body + "*eps";
    if (c0_.is_zero()) return (e.negative ? "-" : "") + eps_part;
    return c0_.to_string() + (e.negative ? " - " : " + ") + eps_part;
  }

  friend Dual operator+(const Dual& a, const Dual& b) { return Dual(a.c0_ + b.c0_, a.c1_ + b.c1_); }
  friend Dual operator-(const Dual& a, const Dual& b) { return Dual(a.c0_ - b.c0_, a.c1_ - b.c1_); }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(a.c0_ * b.c0_, a.c0_ * b.c1_ + a.c1_ * b.c0_);
  }
  friend Dual operator/(const Dual& a, const Dual& b) { return a * b.inverse(); }
  Dual operator-() const { return Dual(-c0_, -c1_); }

  friend bool operator==(const Dual& a, const Dual& b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }

private:
  F c0_{};
  F c1_{};
};

} // namespace cmtwist
