#pragma once

#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/field.hpp"

namespace cmtwist {

/// Variable context: ordered distinct names over a coefficient field. The
/// field is represented by a prototype scalar (its `1`).
template <Scalar K>
class PolyRing {
public:
  PolyRing(std::vector<std::string> names, K proto) : names_(std::move(names)), one_(one_like(proto)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw BadRingHeader("empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw BadRingHeader("duplicate variable '" + names_[i] + "'");
    }
  }

  std::size_t arity() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const K& one() const { return one_; }
  K zero() const { return zero_like(one_); }
  K scalar(long n) const { return one_.from_int(n); }
  std::string field_name() const { return one_.field_name(); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownVariable("'" + name + "' is not a variable of " + to_string());
  }

  /// Header form, e.g. `Q[x,y,w,u]`.
  std::string to_string() const {
    std::string s = field_name() + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
    return s + "]";
  }

  bool same_as(const PolyRing& o) const { return names_ == o.names_ && field_name() == o.field_name(); }

private:
  std::vector<std::string> names_;
  K one_;
};

template <Scalar K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <Scalar K>
RingPtr<K> make_ring(std::vector<std::string> names, const K& proto) {
  return std::make_shared<const PolyRing<K>>(std::move(names), proto);
}

template <Scalar K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b))
    throw ContextMismatch((a ? a->to_string() : "<null>") + " vs " + (b ? b->to_string() : "<null>"));
}

} // namespace cmtwist
