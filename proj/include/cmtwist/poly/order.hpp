#pragma once

#include <compare>
#include <string>

#include "cmtwist/error.hpp"
#include "cmtwist/poly/monomial.hpp"

namespace cmtwist {

/// Global monomial order: lex, grevlex, or a two-block elimination order
/// (grevlex on the first `block` variables, ties broken by grevlex on the rest).
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, Elimination };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder elimination(int block) { return MonomialOrder(Kind::Elimination, block); }

  /// Accepts `lex`, `grevlex`, `elim:k`.
  static MonomialOrder parse(const std::string& s) {
    if (s == "lex") return lex();
    if (s == "grevlex") return grevlex();
    if (s.rfind("elim:", 0) == 0) {
      try {
        std::size_t used = 0;
        int k = std::stoi(s.substr(5), &used);
        if (used == s.size() - 5 && k >= 0) return elimination(k);
      } catch (const std::exception&) {
      }
    }
    throw Error("BadOrder", "unknown monomial order '" + s + "'");
  }

  Kind kind() const { return kind_; }
  int block() const { return block_; }

  std::string name() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::Grevlex: return "grevlex";
      case Kind::Elimination: return "elim:" + std::to_string(block_);
    }
    return "?";
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.arity() != b.arity()) throw ContextMismatch("monomials of different arity");
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < a.arity(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::Grevlex:
        return grevlex_block(a, b, 0, a.arity());
      case Kind::Elimination: {
        std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(block_), a.arity());
        auto c = grevlex_block(a, b, 0, k);
        if (c != 0) return c;
        return grevlex_block(a, b, k, a.arity());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

private:
  MonomialOrder(Kind k, int block) : kind_(k), block_(block) {}

  static std::strong_ordering grevlex_block(const Monomial& a, const Monomial& b, std::size_t begin,
                                            std::size_t end) {
    int da = a.block_degree(begin, end), db = b.block_degree(begin, end);
    if (da != db) return da <=> db;
    for (std::size_t i = end; i > begin; --i)
      if (a[i - 1] != b[i - 1]) return b[i - 1] <=> a[i - 1];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  int block_;
};

} // namespace cmtwist
