#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;

TEST(Rational, ArithmeticIsExactAndCanonical) {
  Rational a = Rational::parse("6/4");
  EXPECT_EQ(a.to_string(), "3/2");
  EXPECT_EQ(a + Rational(1, 2) == Rational(2), true);
  EXPECT_EQ((a * a).to_string(), "9/4");
  EXPECT_EQ((Rational(1) / Rational(3) * Rational(3)), Rational(1));
  EXPECT_TRUE(Rational(-4, -2).is_integer());
  EXPECT_EQ(Rational(-1, 2).sign(), -1);
}

TEST(Rational, ZeroHasNoInverse) {
  EXPECT_THROW(Rational(0).inverse(), ZeroInversion);
  EXPECT_THROW(Rational(1) / Rational(0), ZeroInversion);
}

TEST(Rational, BigNumbersStayExact) {
  Rational big = Rational::parse("123456789012345678901234567890");
  Rational q = big / (big + Rational(1));
  EXPECT_EQ(q * (big + Rational(1)), big);
}

TEST(PrimeField, ReducesAndInverts) {
  PrimeField a(-3, 7);
  EXPECT_EQ(a.residue(), 4u);
  EXPECT_EQ((a * a.inverse()).residue(), 1u);
  for (int v = 1; v < 11; ++v) EXPECT_TRUE((PrimeField(v, 11) * PrimeField(v, 11).inverse()).is_one());
  EXPECT_EQ(a.field_name(), "GF(7)");
}

TEST(PrimeField, RejectsBadModuli) {
  EXPECT_THROW(PrimeField(1, 2), InvalidModulus);
  EXPECT_THROW(PrimeField(1, 3), InvalidModulus);
  EXPECT_THROW(PrimeField(1, 9), InvalidModulus);
  EXPECT_THROW(PrimeField(1, 1), InvalidModulus);
  EXPECT_NO_THROW(PrimeField(1, 5));
}

TEST(PrimeField, MixedModuliAreAContextError) {
  EXPECT_THROW(PrimeField(1, 5) + PrimeField(1, 7), ContextMismatch);
}

TEST(PrimeField, ZeroInversionAndRationalImage) {
  EXPECT_THROW(PrimeField(0, 5).inverse(), ZeroInversion);
  EXPECT_EQ(PrimeField(1, 7).from_rational(Rational(1, 2)).residue(), 4u);
  EXPECT_THROW(PrimeField(1, 7).from_rational(Rational(1, 7)), ZeroInversion);
}

TEST(RationalFunction, NormalizesAndEvaluates) {
  QT t = QT::t();
  QT f = (t * t - QT(1)) / (t - QT(1));
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, t + QT(1));
  EXPECT_EQ(f.eval(Rational(2)), Rational(3));
  QT g = QT(1) / t;
  EXPECT_THROW(g.eval(Rational(0)), ExcludedParameter);
  EXPECT_EQ(g.eval(Rational(4)), Rational(1, 4));
  EXPECT_THROW(QT(0).inverse(), ZeroInversion);
}

TEST(RationalFunction, PrintsReadably) {
  QT t = QT::t();
  EXPECT_EQ((t * t + QT(2)).to_string(), "t^2 + 2");
  EXPECT_EQ(QT(Rational(3, 2)).to_string(), "3/2");
  EXPECT_NE((QT(1) / (t + QT(1))).to_string().find("/("), std::string::npos);
}

TEST(Dual, EpsilonSquaresToZero) {
  using D = Dual<Rational>;
  D e = D::eps(Rational(1));
  EXPECT_TRUE((e * e).is_zero());
  D a(Rational(2), Rational(3));
  D inv = a.inverse();
  EXPECT_TRUE((a * inv).is_one());
  EXPECT_EQ(inv.real(), Rational(1, 2));
  EXPECT_EQ(inv.infinitesimal(), Rational(-3, 4));
}

TEST(Dual, NonUnitsRefuseInversion) {
  using D = Dual<PrimeField>;
  D e = D::eps(PrimeField(1, 7));
  EXPECT_THROW(e.inverse(), DualNotInvertible);
  EXPECT_EQ(e.field_name(), "GF(7)[eps]");
}

TEST(UPoly, GcdAndRationalRoots) {
  using P = UPoly<Rational>;
  P x = P::monomial(Rational(1), 1);
  P f = (x - P::constant(Rational(2))) * (x + P::constant(Rational(1, 3))) * (x * x + P::constant(Rational(1)));
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-1, 3));
  EXPECT_EQ(roots[1], Rational(2));
  P g = (x - P::constant(Rational(2))) * (x - P::constant(Rational(5)));
  EXPECT_EQ(gcd(f, g).monic(), (x - P::constant(Rational(2))));
}
