#pragma once

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace cmtwist {

class Rational;

/// Exact coefficient type. Elements carry whatever runtime data their field
/// needs (e.g. the modulus), so `x.from_int(n)` produces `n` in the field of `x`.
/// Dual numbers satisfy this too; they are a ring, and `inverse()` throws on
/// non-units.
template <class K>
concept Scalar = std::regular<K> && requires(const K a, const K b, long n,
                                             const Rational& q,
                                             std::string_view name) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<K>;
  { a.from_int(n) } -> std::same_as<K>;
  { a.from_rational(q) } -> std::same_as<K>;
  { a.named_constant(name) } -> std::same_as<std::optional<K>>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.field_name() } -> std::convertible_to<std::string>;
};

/// A scalar's printed form split into sign and body. `compound` is set when
/// the body has a top-level `+`/`-` and needs parentheses as a factor.
struct SignedText {
  bool negative = false;
  std::string body;
  bool compound = false;
};

inline SignedText split_sign(const std::string& s) {
  auto top_level_sum = [](std::string_view t) {
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      char c = t[i];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if ((c == '+' || c == '-') && depth == 0 && i > 0 && t[i - 1] != '^') return true;
    }
    return false;
  };
  SignedText out;
  if (!s.empty() && s[0] == '-' && !top_level_sum(std::string_view(s).substr(1))) {
    out.negative = true;
    out.body = s.substr(1);
  } else {
    out.body = s;
  }
  out.compound = top_level_sum(out.body);
  return out;
}

template <Scalar K>
K zero_like(const K& proto) { return proto.from_int(0); }

template <Scalar K>
K one_like(const K& proto) { return proto.from_int(1); }

} // namespace cmtwist
