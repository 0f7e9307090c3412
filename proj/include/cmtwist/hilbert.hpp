#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmtwist/error.hpp"
#include "cmtwist/ideal.hpp"
#include "cmtwist/scalars/rational.hpp"

namespace cmtwist {

/// Polynomial in t with rational coefficients, lowest degree first.
class HilbertPolynomial {
public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static HilbertPolynomial linear(long slope, long constant) { return HilbertPolynomial({Rational(constant), Rational(slope)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational operator()(long t) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * Rational(t) + *it;
    return v;
  }

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

  /// e.g. "3*t + 1", "t^2 - 1/2*t".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      Rational c = c_[i];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      if (neg) c = -c;
      if (s.empty()) s = neg ? "-" : "";
      else s += neg ? " - " : " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      if (mono.empty()) s += c.to_string();
      else if (c.is_one()) s += mono;
      else s += c.to_string() + "*" + mono;
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct HilbertData {
  std::size_t variables = 0;
  std::vector<mpz_class> numerator;  // HS = N(s)/(1-s)^variables
  HilbertPolynomial polynomial;
  int regularity_index = 0;          // least t0 with HF(t) = HP(t) for all t >= t0

  mpz_class function(long t) const {
    if (t < 0) return 0;
    mpz_class total = 0;
    const long n = static_cast<long>(variables);
    for (long i = 0; i < static_cast<long>(numerator.size()) && i <= t; ++i) {
      if (numerator[i] == 0) continue;
      if (n == 0) {
        if (i == t) total += numerator[i];
        continue;
      }
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t - i + n - 1), static_cast<unsigned long>(n - 1));
      total += numerator[i] * binom;
    }
    return total;
  }
};

namespace detail {

using MonomialList = std::vector<Monomial>;

inline MonomialList minimalize(MonomialList gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialList out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

using Numerator = std::vector<mpz_class>;
using SeriesMemo = std::map<std::vector<std::vector<int>>, Numerator>;

inline std::vector<std::vector<int>> memo_key(const MonomialList& gens) {
  std::vector<std::vector<int>> k;
  for (const auto& m : gens) k.push_back(m.exponents());
  return k;
}

inline void add_into(Numerator& a, const Numerator& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

inline Numerator times_one_minus_power(const Numerator& a, int d) {
  Numerator out(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  return out;
}

/// Numerator of the Hilbert series of k[vars]/(gens) by pivot splitting on
/// a variable: N(J) = N(J + (v)) + s * N(J : v).
inline Numerator series_numerator(const MonomialList& input, std::size_t arity,
                                  SeriesMemo& memo) {
  MonomialList gens = minimalize(input);
  auto key = memo_key(gens);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && pairwise_coprime; ++j)
      if (!coprime(gens[i], gens[j])) pairwise_coprime = false;

  Numerator result;
  if (pairwise_coprime) {
    result = {1};
    for (const auto& m : gens) result = times_one_minus_power(result, m.degree());
  } else {
    // pivot on the variable occurring in the most generators of degree > 1
    std::vector<int> count(arity, 0);
    for (const auto& m : gens)
      if (m.degree() > 1)
        for (std::size_t v = 0; v < arity; ++v)
          if (m[v] > 0) count[v]++;
    std::size_t pivot = std::max_element(count.begin(), count.end()) - count.begin();
    Monomial v = Monomial::variable(arity, pivot);

    MonomialList plus = gens;
    plus.push_back(v);
    MonomialList quotient;
    for (const auto& m : gens) quotient.push_back(v.divides(m) ? m / v : m);

    result = series_numerator(plus, arity, memo);
    add_into(result, series_numerator(quotient, arity, memo), 1);
  }
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  memo.emplace(std::move(key), result);
  return result;
}

/// Interpolates a polynomial of degree < n through (x0 + i, values[i]).
inline HilbertPolynomial interpolate(long x0, const std::vector<mpz_class>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> acc(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // Lagrange basis polynomial for node x0+i, expanded in t
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational node(x0 + static_cast<long>(j));
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * node;
      }
      basis = std::move(next);
      denom *= Rational(static_cast<long>(i) - static_cast<long>(j));
    }
    Rational scale = Rational(mpq_class(values[i])) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
  }
  return HilbertPolynomial(std::move(acc));
}

} // namespace detail

/// Hilbert data of k[vars]/(monomials).
inline HilbertData monomial_hilbert_data(const std::vector<Monomial>& leads, std::size_t arity) {
  detail::SeriesMemo memo;
  HilbertData hd;
  hd.variables = arity;
  hd.numerator = detail::series_numerator(leads, arity, memo);

  long bound = static_cast<long>(hd.numerator.size());
  for (const auto& m : leads) bound = std::max<long>(bound, m.degree());
  const std::size_t points = std::max<std::size_t>(arity, 1);
  std::vector<mpz_class> values;
  for (std::size_t i = 0; i < points; ++i) values.push_back(hd.function(bound + 1 + static_cast<long>(i)));
  hd.polynomial = detail::interpolate(bound + 1, values);
  for (long extra = 0; extra < 2; ++extra) {
    long t = bound + 1 + static_cast<long>(points) + extra;
    if (hd.polynomial(t) != Rational(mpq_class(hd.function(t))))
      throw Error("InternalError", "Hilbert polynomial not stable past the bound");
  }
  long t0 = bound + 1;
  while (t0 > 0 && hd.polynomial(t0 - 1) == Rational(mpq_class(hd.function(t0 - 1)))) --t0;
  hd.regularity_index = static_cast<int>(t0);
  return hd;
}

template <Scalar K>
HilbertData hilbert_series(const Ideal<K>& I, const MonomialOrder& order = MonomialOrder::grevlex()) {
  if (!I.is_homogeneous()) throw NotHomogeneous("Hilbert series needs a homogeneous ideal");
  return monomial_hilbert_data(I.basis(order).leading_monomials(), I.ring()->arity());
}

template <Scalar K>
long hilbert_function(const Ideal<K>& I, long t) {
  if (t < 0) throw Error("BadArgument", "Hilbert function at negative degree");
  return hilbert_series(I).function(t).get_si();
}

/// Monomials of degree d outside the leading-term ideal: a basis of (S/I)_d.
template <Scalar K>
std::vector<Monomial> standard_monomials(const Ideal<K>& I, int d, const MonomialOrder& order = MonomialOrder::grevlex()) {
  const auto& leads = I.basis(order).leading_monomials();
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(I.ring()->arity(), d)) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

struct DegreeGenus {
  Rational degree;
  Rational genus;
};

inline DegreeGenus degree_genus(const HilbertPolynomial& hp) {
  if (hp.degree() != 1) throw NotACurve("Hilbert polynomial " + hp.to_string() + " is not linear");
  return {hp.coefficient(1), Rational(1) - hp.coefficient(0)};
}

inline DegreeGenus degree_genus(const HilbertData& hd) { return degree_genus(hd.polynomial); }

} // namespace cmtwist
