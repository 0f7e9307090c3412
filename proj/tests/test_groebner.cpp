#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"
#include "oracles/oracles.hpp"

using namespace cmtwist;

namespace {

RingPtr<Rational> T() { return curve_ring(Rational(1)); }

} // namespace

TEST(Groebner, TripleLineBasis) {
  auto R = T();
  auto x = var(R, "x"), y = var(R, "y"), u = var(R, "u");
  auto gb = buchberger(R, {x * u, y * u - x * x, u * u});
  EXPECT_TRUE(gb.reduced());
  std::vector<std::string> printed;
  for (const auto& g : gb.elements()) printed.push_back(g.to_string());
  EXPECT_EQ(printed, (std::vector<std::string>{"u^2", "x*u", "x^2 - y*u"}));
  EXPECT_EQ(gb.size(), 3u);
  EXPECT_TRUE(normal_form(x * x * u, gb).is_zero());
  EXPECT_EQ(normal_form(x * x, gb), y * u);
}

TEST(Groebner, AgreesWithTextbookAlgorithm) {
  auto R = T();
  for (CaseLabel c : all_cases()) {
    auto gens = catalog_curve_generators(c, R);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      auto gb = buchberger(R, gens, ord);
      EXPECT_EQ(gb.elements(), oracle::naive_reduced_basis(gens, ord)) << roman(c) << " " << ord.name();
    }
  }
}

TEST(Groebner, UnitIdeal) {
  auto R = make_ring<Rational>({"x", "y"}, Rational(1));
  auto x = var(R, "x"), y = var(R, "y");
  auto gb = buchberger(R, {x * y - Polynomial<Rational>::constant(R, 1), x});
  EXPECT_TRUE(gb.is_unit_ideal());
}

TEST(Groebner, EmptyInputNeedsARing) {
  EXPECT_THROW(buchberger(std::vector<Polynomial<Rational>>{}), ContextMismatch);
  auto gb = buchberger(T(), std::vector<Polynomial<Rational>>{});
  EXPECT_EQ(gb.size(), 0u);
}

TEST(Groebner, LiftExpressesMembers) {
  auto R = T();
  auto x = var(R, "x"), y = var(R, "y"), w = var(R, "w"), u = var(R, "u");
  std::vector<Polynomial<Rational>> gens{x * u - y * w, y * u - x * (x + w), u * u - w * (x + w)};
  auto tb = tracked_buchberger(R, gens);
  for (const auto& g : tb.basis.elements()) {
    auto c = lift(g, tb);
    ASSERT_TRUE(c.has_value());
    Polynomial<Rational> sum(R);
    for (std::size_t k = 0; k < gens.size(); ++k) sum += (*c)[k] * gens[k];
    EXPECT_EQ(sum, g);
  }
  EXPECT_FALSE(lift(x, tb).has_value());
}

TEST(Syzygies, TwoLinearRelationsForEachCatalogCurve) {
  auto R = T();
  for (CaseLabel c : all_cases()) {
    auto gens = catalog_curve_generators(c, R);
    auto syz = syzygy_basis(R, gens);
    ASSERT_EQ(syz.syzygies.size(), 2u) << roman(c);
    for (const auto& s : syz.syzygies) {
      Polynomial<Rational> sum(R);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!s[k].is_zero()) {
          EXPECT_EQ(s[k].degree(), 1);
        }
        sum += s[k] * gens[k];
      }
      EXPECT_TRUE(sum.is_zero());
      EXPECT_EQ(SyzygyBasis<Rational>::degree_of(s, gens), 3);
    }
    EXPECT_EQ(oracle::linear_syzygy_dimension(R, gens), 2u) << roman(c);
  }
}

TEST(Syzygies, CompleteIntersectionHasKoszulRelation) {
  auto R = make_ring<Rational>({"x", "y", "z"}, Rational(1));
  auto x = var(R, "x"), y = var(R, "y");
  auto syz = syzygy_basis(R, {x * x, y * y * y});
  ASSERT_EQ(syz.syzygies.size(), 1u);
  EXPECT_EQ(SyzygyBasis<Rational>::degree_of(syz.syzygies[0], {x * x, y * y * y}), 5);
}

TEST(Groebner, ObserverSeesInvertedCoefficients) {
  auto R = make_ring<QT>({"x", "y"}, QT(1));
  auto t = Polynomial<QT>::constant(R, QT::t());
  auto x = var(R, "x"), y = var(R, "y");
  std::vector<QT> seen;
  InversionObserver<QT> obs = [&](const QT& c) { seen.push_back(c); };
  auto gb = buchberger(R, {t * x - y, (t - Polynomial<QT>::constant(R, 1)) * y}, MonomialOrder::grevlex(), obs);
  EXPECT_FALSE(seen.empty());
  EXPECT_EQ(gb.size(), 2u);
}

TEST(Groebner, PrimeFieldBasis) {
  auto R = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(1, 7));
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  std::vector<Polynomial<PrimeField>> gens{x * x * PrimeField(3, 7) - y * z, x * y + z * z * PrimeField(5, 7)};
  auto gb = buchberger(R, gens);
  EXPECT_EQ(gb.elements(), oracle::naive_reduced_basis(gens, MonomialOrder::grevlex()));
}
