// Library results checked against the slow reference computations.

#include <gtest/gtest.h>

#include <random>

#include "cmtwist/cmtwist.hpp"
#include "oracles/oracles.hpp"
#include "support/support.hpp"

using namespace cmtwist;

namespace {

template <Scalar K>
std::vector<Ideal<K>> oracle_ideals(const K& proto) {
  std::vector<Ideal<K>> out;
  auto T = curve_ring(proto);
  for (CaseLabel c : all_cases()) {
    out.emplace_back(T, catalog_curve_generators(c, T));
    out.push_back(catalog_image(c, proto));
  }
  auto S = plane_ring(proto);
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z"), w = var(S, "w");
  out.emplace_back(S, std::vector<Polynomial<K>>{x * z, y * z, z * z, x.pow(3) + x * x * w - y * y * w});
  out.emplace_back(S, std::vector<Polynomial<K>>{x * z - y * y, y * w - z * z, x * w - y * z});
  return out;
}

template <Scalar K>
Polynomial<K> random_form(std::mt19937& rng, const RingPtr<K>& R, int d, int terms) {
  auto monos = monomials_of_degree(R->arity(), d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  Polynomial<K> f(R);
  for (int i = 0; i < terms; ++i) f += Polynomial<K>::monomial(R, monos[pick(rng)], R->scalar(coeff(rng)));
  return f;
}

template <Scalar K>
void membership_agrees(const K& proto) {
  std::mt19937 rng(20261018);
  for (const auto& I : oracle_ideals(proto)) {
    const auto& R = I.ring();
    for (int d = 0; d <= 6; ++d) {
      oracle::MacaulaySpan<K> span(R, I.generators(), d);
      for (const auto& m : monomials_of_degree(R->arity(), d)) {
        auto f = Polynomial<K>::monomial(R, m, R->one());
        ASSERT_EQ(I.contains(f), span.contains(f)) << I.to_string() << " " << f.to_string();
      }
      for (int trial = 0; trial < 6; ++trial) {
        // a member built from the generators, and the same plus a random form
        Polynomial<K> member(R);
        for (const auto& g : I.generators())
          if (g.degree() <= d) member += g * random_form(rng, R, d - g.degree(), 3);
        EXPECT_TRUE(I.contains(member));
        EXPECT_TRUE(span.contains(member));
        Polynomial<K> other = member + random_form(rng, R, d, 2);
        EXPECT_EQ(I.contains(other), span.contains(other)) << other.to_string();
      }
    }
  }
}

} // namespace

TEST(Oracle, ReducedBasesMatchTextbookBuchberger) {
  for (const auto& I : oracle_ideals(PrimeField(1, 5)))
    EXPECT_EQ(I.basis().elements(), oracle::naive_reduced_basis(I.generators(), MonomialOrder::grevlex())) << I.to_string();
  for (const auto& I : oracle_ideals(Rational(1)))
    EXPECT_EQ(buchberger(I.ring(), I.generators(), MonomialOrder::lex()).elements(),
              oracle::naive_reduced_basis(I.generators(), MonomialOrder::lex()))
        << I.to_string();
}

TEST(Oracle, MembershipThroughDegreeSixOverQ) { membership_agrees(Rational(1)); }
TEST(Oracle, MembershipThroughDegreeSixOverGF7) { membership_agrees(PrimeField(1, 7)); }

TEST(Oracle, MacaulayMemberOnMixedDegrees) {
  auto I = oracle_ideals(Rational(1)).front();
  auto R = I.ring();
  auto x = var(R, "x"), y = var(R, "y");
  Polynomial<Rational> f = I.generators()[0] * (x + y * y);
  EXPECT_TRUE(oracle::macaulay_member(f, I.generators()));
  EXPECT_TRUE(I.contains(f));
  EXPECT_FALSE(oracle::macaulay_member(f + x, I.generators()));
}

TEST(Oracle, HilbertFunctionByCounting) {
  for (const auto& I : oracle_ideals(Rational(1))) {
    HilbertData h = hilbert_series(I);
    for (int t = 0; t <= 8; ++t)
      EXPECT_EQ(h.function(t), oracle::hilbert_function(I.ring(), I.generators(), t)) << I.to_string() << " t=" << t;
  }
}

TEST(Oracle, HilbertFunctionOfFamilyFibers) {
  for (const auto& c : {Rational(0), Rational(1), Rational(-2)}) {
    Ideal<Rational> F = fiber_at(nodal_family_ideal(), c);
    HilbertData h = hilbert_series(F);
    for (int t = 0; t <= 7; ++t) EXPECT_EQ(h.function(t), oracle::hilbert_function(F.ring(), F.generators(), t));
  }
  Ideal<Rational> J = fiber_at(jumping_family(), Rational(0));
  HilbertData h = hilbert_series(J);
  for (int t = 0; t <= 7; ++t) EXPECT_EQ(h.function(t), oracle::hilbert_function(J.ring(), J.generators(), t));
}

TEST(Oracle, DegreeThreeSyzygiesByLinearAlgebra) {
  for (CaseLabel c : all_cases())
    for (auto proto : {PrimeField(1, 5), PrimeField(1, 7)}) {
      auto T = curve_ring(proto);
      auto gens = catalog_curve_generators(c, T);
      auto syz = syzygy_basis(T, gens);
      EXPECT_EQ(oracle::linear_syzygy_dimension(T, gens), syz.syzygies.size()) << roman(c);
    }
}

TEST(Oracle, EmbeddedDeformationCountFromSyzygyConditions) {
  // Hom(I, S/I)_0 by brute force: choose h_i in (S/I)_2 and impose every
  // linear syzygy, counted through the Macaulay span of I in degree 3.
  auto T = curve_ring(Rational(1));
  for (CaseLabel c : {CaseLabel::I, CaseLabel::IX}) {
    auto gens = catalog_curve_generators(c, T);
    Ideal<Rational> I(T, gens);
    oracle::MacaulaySpan<Rational> deg2(T, gens, 2), deg3(T, gens, 3);
    std::vector<Polynomial<Rational>> quot2;  // monomial complement of I_2
    for (const auto& m : monomials_of_degree(4, 2)) {
      auto f = Polynomial<Rational>::monomial(T, m, Rational(1));
      if (!I.contains(f) && normal_form(f, I.basis()) == f) quot2.push_back(f);
    }
    ASSERT_EQ(quot2.size(), 7u);
    auto syz = syzygy_basis(T, gens).syzygies;
    // unknown vector: coefficients of h_1, h_2, h_3 on quot2
    std::size_t n = 3 * quot2.size();
    auto cubics = monomials_of_degree(4, 3);
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : syz) {
      // sum r_i h_i must lie in I_3: project onto the normal-form coordinates
      std::vector<Polynomial<Rational>> cols;
      for (std::size_t i = 0; i < 3; ++i)
        for (const auto& q : quot2) cols.push_back(normal_form(r[i] * q, I.basis()));
      for (const auto& m : cubics) {
        std::vector<Rational> row;
        for (const auto& col : cols) row.push_back(col.coefficient(m));
        rows.push_back(row);
      }
    }
    Matrix<Rational> A = Matrix<Rational>::from_rows(rows, n, Rational(1));
    EXPECT_EQ(n - A.rank(), 12u) << roman(c);
    EXPECT_EQ(deg3.rank(), 20u - 10u);
    EXPECT_EQ(deg2.rank(), 3u);
  }
}
