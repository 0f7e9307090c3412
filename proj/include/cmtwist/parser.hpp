#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cmtwist/error.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/poly/polynomial.hpp"
#include "cmtwist/poly/ring.hpp"
#include "cmtwist/poly/ring_map.hpp"
#include "cmtwist/scalars/dual.hpp"
#include "cmtwist/scalars/prime_field.hpp"
#include "cmtwist/scalars/rational.hpp"
#include "cmtwist/scalars/rational_function.hpp"

namespace cmtwist {

/// Coefficient field of a text document: Q, GF(p), Q(t), optionally with eps.
struct FieldSpec {
  enum class Kind { Rational, Prime, RationalFunction };
  Kind kind = Kind::Rational;
  std::uint32_t modulus = 0;
  bool dual = false;

  std::string to_string() const {
    std::string base = kind == Kind::Rational ? "Q" : kind == Kind::Prime ? "GF(" + std::to_string(modulus) + ")" : "Q(t)";
    return dual ? base + "[eps]" : base;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  /// Accepts the header spellings (Q, GF(7), Q(t)) and the flag spellings
  /// (GF7, Qt).
  static FieldSpec parse(std::string_view s) {
    FieldSpec f;
    if (s.size() > 5 && s.substr(s.size() - 5) == "[eps]") {
      f.dual = true;
      s = s.substr(0, s.size() - 5);
    }
    if (s == "Q") return f;
    if (s == "Q(t)" || s == "Qt") {
      f.kind = Kind::RationalFunction;
      return f;
    }
    std::string_view digits;
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') digits = s.substr(3, s.size() - 4);
    else if (s.size() > 2 && s.substr(0, 2) == "GF") digits = s.substr(2);
    if (digits.empty() || digits.size() > 9) throw BadRingHeader("unknown field '" + std::string(s) + "'");
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw BadRingHeader("unknown field '" + std::string(s) + "'");
    f.kind = Kind::Prime;
    f.modulus = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
    PrimeField(1, f.modulus);  // validates: prime, not 2 or 3
    return f;
  }
};

struct RingHeader {
  FieldSpec field;
  std::vector<std::string> variables;

  std::string to_string() const {
    std::string s = "ring " + field.to_string() + "[";
    for (std::size_t i = 0; i < variables.size(); ++i) s += (i ? "," : "") + variables[i];
    return s + "]";
  }
  friend bool operator==(const RingHeader&, const RingHeader&) = default;
};

/// One nonblank, non-comment body line with its 1-based line number.
struct SourceLine {
  std::string text;
  int line = 0;
};

/// Text split into ring headers and body lines; each body line remembers
/// how many headers preceded it.
struct RawDocument {
  std::vector<RingHeader> headers;
  std::vector<std::pair<std::size_t, SourceLine>> body;
};

namespace detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline RingHeader parse_header(const std::string& text, int line) {
  // ring <field>[v1,...,vn]
  std::size_t pos = text.find("ring");
  std::string rest = trim(std::string_view(text).substr(pos + 4));
  std::size_t open = rest.rfind('[');
  if (open == std::string::npos || rest.back() != ']')
    throw SyntaxError("ring header needs a [variables] list", line, static_cast<int>(text.size()));
  RingHeader h;
  h.field = FieldSpec::parse(trim(std::string_view(rest).substr(0, open)));
  std::string vars = rest.substr(open + 1, rest.size() - open - 2);
  std::size_t start = 0;
  while (start <= vars.size()) {
    std::size_t comma = vars.find(',', start);
    std::string v = trim(std::string_view(vars).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (v.empty() || !ident_start(v[0])) throw BadRingHeader("bad variable name '" + v + "' on line " + std::to_string(line));
    for (char c : v)
      if (!ident_char(c)) throw BadRingHeader("bad variable name '" + v + "' on line " + std::to_string(line));
    h.variables.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return h;
}

} // namespace detail

/// Splits text into headers and body lines. `#` starts a comment.
inline RawDocument split_document(std::string_view text) {
  RawDocument doc;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t')) raw.pop_back();
    std::string t = detail::trim(raw);
    if (!t.empty()) {
      if (t.rfind("ring", 0) == 0 && (t.size() == 4 || std::isspace(static_cast<unsigned char>(t[4]))))
        doc.headers.push_back(detail::parse_header(raw, line));
      else if (doc.headers.empty())
        throw SyntaxError("expected a ring header before '" + t + "'", line, 1);
      else
        doc.body.push_back({doc.headers.size(), {raw, line}});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (doc.headers.empty()) throw SyntaxError("missing ring header", line, 1);
  return doc;
}

namespace detail {

/// Recursive descent over one line:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (('*' | '/' | juxtaposition) power)*
///   power  := atom ['^' integer]
///   atom   := integer | identifier | '(' expr ')'
template <Scalar K>
class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr<K> ring, int line) : s_(text), ring_(std::move(ring)), line_(line) {}

  Polynomial<K> parse_all() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Polynomial<K> p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw SyntaxError(what, line_, static_cast<int>(at) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial<K> expr() {
    bool neg = false;
    if (peek('+') || peek('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial<K> acc = term();
    if (neg) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = s_[pos_] == '-';
      ++pos_;
      Polynomial<K> t = term();
      if (minus) acc -= t;
      else acc += t;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * power();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        Polynomial<K> d = power();
        if (!d.is_constant() || d.is_zero()) fail_at("division by a non-constant or zero", at);
        acc = acc * Polynomial<K>::constant(ring_, d.constant_term().inverse());
      } else if (starts_atom()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> power() {
    Polynomial<K> base = atom();
    if (peek('^')) {
      std::size_t caret = pos_++;
      skip();
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (b == pos_) fail_at("exponent expected after '^'", caret);
      if (pos_ - b > 4) fail_at("exponent too large", b);
      base = base.pow(std::stoi(std::string(s_.substr(b, pos_ - b))));
    }
    return base;
  }

  Polynomial<K> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial<K> inner = expr();
      if (!peek(')')) fail_at("unbalanced '('", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpq_class q(mpz_class(std::string(s_.substr(b, pos_ - b))));
      return Polynomial<K>::constant(ring_, ring_->one().from_rational(Rational(q)));
    }
    if (ident_start(c)) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      if (auto i = ring_->index_of(name)) return Polynomial<K>::variable(ring_, *i);
      if (auto k = ring_->one().named_constant(name)) return Polynomial<K>::constant(ring_, *k);
      throw UnknownVariable("'" + name + "' at line " + std::to_string(line_) + ", column " + std::to_string(b + 1));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  RingPtr<K> ring_;
  int line_;
  std::size_t pos_ = 0;
};

} // namespace detail

template <Scalar K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr<K>& ring, int line = 1) {
  return detail::PolyParser<K>(text, ring, line).parse_all();
}

template <Scalar K>
RingPtr<K> ring_from_header(const RingHeader& h, const K& proto) {
  if (proto.field_name() != h.field.to_string())
    throw ContextMismatch("header field " + h.field.to_string() + " vs " + proto.field_name());
  return make_ring<K>(h.variables, proto);
}

template <Scalar K>
RingHeader header_of(const RingPtr<K>& R) {
  return {FieldSpec::parse(R->field_name()), R->names()};
}

// ---------------------------------------------------------------------------
// .ideal: one header, one generator per line.

template <Scalar K>
struct IdealDocument {
  RingHeader header;
  Ideal<K> ideal;

  std::string print() const {
    std::string s = header.to_string() + "\n";
    for (const auto& g : ideal.generators()) s += g.to_string() + "\n";
    return s;
  }
  friend bool operator==(const IdealDocument& a, const IdealDocument& b) {
    return a.header == b.header && a.ideal.generators() == b.ideal.generators();
  }
};

template <Scalar K>
IdealDocument<K> parse_ideal_document(const RawDocument& doc, const K& proto) {
  if (doc.headers.size() != 1) throw SyntaxError("an ideal file has exactly one ring header", 1, 1);
  auto R = ring_from_header(doc.headers[0], proto);
  std::vector<Polynomial<K>> gens;
  for (const auto& [_, l] : doc.body) gens.push_back(parse_polynomial(l.text, R, l.line));
  return {doc.headers[0], Ideal<K>(R, std::move(gens))};
}

template <Scalar K>
IdealDocument<K> parse_ideal_text(std::string_view text, const K& proto) {
  return parse_ideal_document(split_document(text), proto);
}

template <Scalar K>
std::string print_ideal(const Ideal<K>& I) {
  return IdealDocument<K>{header_of(I.ring()), I}.print();
}

// ---------------------------------------------------------------------------
// .map: source header, target header, `v -> poly` lines for every source
// variable, then optional relations of the target ring.

template <Scalar K>
struct MapDocument {
  RingHeader source_header;
  RingHeader target_header;
  RingMap<K> map;
  std::vector<Polynomial<K>> relations;

  Ideal<K> target_ideal() const { return Ideal<K>(map.target(), relations); }

  std::string print() const {
    std::string s = source_header.to_string() + "\n" + target_header.to_string() + "\n";
    for (std::size_t i = 0; i < map.images().size(); ++i)
      s += map.source()->name(i) + " -> " + map.images()[i].to_string() + "\n";
    for (const auto& r : relations) s += r.to_string() + "\n";
    return s;
  }
  friend bool operator==(const MapDocument& a, const MapDocument& b) {
    return a.source_header == b.source_header && a.target_header == b.target_header &&
           a.map.images() == b.map.images() && a.relations == b.relations;
  }
};

template <Scalar K>
MapDocument<K> parse_map_document(const RawDocument& doc, const K& proto) {
  if (doc.headers.size() != 2) throw SyntaxError("a map file has a source and a target ring header", 1, 1);
  auto S = ring_from_header(doc.headers[0], proto);
  auto T = ring_from_header(doc.headers[1], proto);
  std::vector<std::optional<Polynomial<K>>> images(S->arity());
  std::vector<Polynomial<K>> relations;
  for (const auto& [section, l] : doc.body) {
    if (section != 2) throw SyntaxError("map lines must follow both ring headers", l.line, 1);
    auto arrow = l.text.find("->");
    if (arrow == std::string::npos) {
      relations.push_back(parse_polynomial(l.text, T, l.line));
      continue;
    }
    std::string lhs = detail::trim(std::string_view(l.text).substr(0, arrow));
    auto idx = S->index_of(lhs);
    if (!idx) throw UnknownVariable("'" + lhs + "' is not a source variable (line " + std::to_string(l.line) + ")");
    if (images[*idx]) throw SyntaxError("variable '" + lhs + "' assigned twice", l.line, 1);
    // parse the right-hand side with columns relative to the full line
    std::string padded(arrow + 2, ' ');
    padded += l.text.substr(arrow + 2);
    images[*idx] = parse_polynomial(padded, T, l.line);
  }
  std::vector<Polynomial<K>> ims;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw SyntaxError("no image given for '" + S->name(i) + "'", 1, 1);
    ims.push_back(*images[i]);
  }
  return {doc.headers[0], doc.headers[1], RingMap<K>(S, T, std::move(ims)), std::move(relations)};
}

template <Scalar K>
MapDocument<K> parse_map_text(std::string_view text, const K& proto) {
  return parse_map_document(split_document(text), proto);
}

// ---------------------------------------------------------------------------
// Runtime field dispatch.

/// Calls f with a prototype `1` of the field (not the dual extension).
template <class F>
decltype(auto) with_field(const FieldSpec& spec, F&& f) {
  if (spec.dual) throw BadRingHeader("this operation needs a field, not " + spec.to_string());
  switch (spec.kind) {
    case FieldSpec::Kind::Prime: return f(PrimeField(1, spec.modulus));
    case FieldSpec::Kind::RationalFunction: return f(RationalFunction(1));
    case FieldSpec::Kind::Rational: break;
  }
  return f(Rational(1));
}

/// Like with_field, also allowing dual-number coefficients.
template <class F>
decltype(auto) with_scalars(const FieldSpec& spec, F&& f) {
  if (!spec.dual) return with_field(spec, std::forward<F>(f));
  switch (spec.kind) {
    case FieldSpec::Kind::Prime: return f(Dual<PrimeField>(PrimeField(1, spec.modulus)));
    case FieldSpec::Kind::RationalFunction: return f(Dual<RationalFunction>(RationalFunction(1)));
    case FieldSpec::Kind::Rational: break;
  }
  return f(Dual<Rational>(Rational(1)));
}

/// Parses `a,b,c,d` into field elements.
template <Scalar K>
std::vector<K> parse_point(std::string_view text, const K& proto) {
  auto R = make_ring<K>({"_"}, proto);
  std::vector<K> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto p = parse_polynomial(piece, R);
    if (!p.is_constant()) throw SyntaxError("point coordinates must be constants", 1, static_cast<int>(start) + 1);
    out.push_back(p.constant_term());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

} // namespace cmtwist
