#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;

namespace {

RingPtr<Rational> ring4() { return make_ring<Rational>({"x", "y", "z", "w"}, Rational(1)); }

} // namespace

TEST(Monomial, DivisionAndLcm) {
  Monomial a({2, 1, 0}), b({1, 3, 1});
  EXPECT_EQ(lcm(a, b), Monomial({2, 3, 1}));
  EXPECT_TRUE(Monomial({1, 1, 0}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(a / Monomial({1, 0, 0}), Monomial({1, 1, 0}));
  EXPECT_TRUE(coprime(Monomial({1, 0, 0}), Monomial({0, 2, 1})));
  EXPECT_EQ(monomials_of_degree(4, 3).size(), 20u);
}

TEST(MonomialOrder, LexGrevlexElimination) {
  Monomial xy2({1, 2, 0}), x2({2, 0, 0}), yz({0, 1, 1}), xz({1, 0, 1});
  auto lex = MonomialOrder::lex(), grev = MonomialOrder::grevlex();
  EXPECT_TRUE(lex.greater(x2, xy2));
  EXPECT_TRUE(grev.greater(xy2, x2));
  // grevlex on equal degree: smaller power of the last variable wins
  EXPECT_TRUE(grev.greater(Monomial({1, 1, 0}), xz));
  EXPECT_TRUE(grev.greater(xz, Monomial({0, 0, 2})));
  auto el = MonomialOrder::elimination(1);
  EXPECT_TRUE(el.greater(Monomial({1, 0, 0}), Monomial({0, 5, 5})));
  EXPECT_TRUE(el.greater(yz, Monomial({0, 0, 2})));
  EXPECT_EQ(MonomialOrder::parse("elim:2"), MonomialOrder::elimination(2));
  EXPECT_THROW(MonomialOrder::parse("deglex"), Error);
}

TEST(Polynomial, RingArithmetic) {
  auto R = ring4();
  auto x = var(R, "x"), y = var(R, "y"), w = var(R, "w");
  auto f = (x + y) * (x - y);
  EXPECT_EQ(f, x * x - y * y);
  EXPECT_EQ((x + y).pow(3).size(), 4u);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((x * x * w).degree(), 3);
  EXPECT_TRUE(f.is_homogeneous());
  EXPECT_FALSE((x + Polynomial<Rational>::constant(R, 1)).is_homogeneous());
  EXPECT_EQ(f.coefficient(Monomial({0, 2, 0, 0})), Rational(-1));
}

TEST(Polynomial, PrintsInOrder) {
  auto R = ring4();
  auto x = var(R, "x"), y = var(R, "y"), w = var(R, "w");
  auto q = x.pow(3) + x * x * w - y * y * w;
  EXPECT_EQ(q.to_string(), "x^3 + x^2*w - y^2*w");
  EXPECT_EQ((x * Rational(1, 2) - y).to_string(), "1/2*x - y");
}

TEST(Polynomial, DerivativesAndEvaluation) {
  auto R = ring4();
  auto x = var(R, "x"), y = var(R, "y"), w = var(R, "w");
  auto q = x.pow(3) + x * x * w - y * y * w;
  EXPECT_EQ(q.partial_derivative("x"), x * x * Rational(3) + x * w * Rational(2));
  EXPECT_EQ(q.partial_derivative("z"), Polynomial<Rational>(R));
  EXPECT_EQ(q.evaluate({Rational(1), Rational(1), Rational(0), Rational(1)}), Rational(1));
  EXPECT_THROW(var(R, "u"), UnknownVariable);
}

TEST(Polynomial, HomogenizeRoundTrip) {
  auto R = ring4();
  auto A = make_ring<Rational>({"x", "y", "z"}, Rational(1));
  auto x = var(R, "x"), y = var(R, "y"), w = var(R, "w");
  auto q = x.pow(3) + x * x * w - y * y * w;
  auto affine = q.dehomogenize(3, A);
  EXPECT_EQ(affine.to_string(), "x^3 + x^2 - y^2");
  EXPECT_EQ(affine.homogenize(3, R), q);
}

TEST(Polynomial, MixingRingsIsAnError) {
  auto R = ring4();
  auto S = make_ring<Rational>({"x", "y"}, Rational(1));
  EXPECT_THROW(var(R, "x") + var(S, "x"), ContextMismatch);
  auto G = make_ring<PrimeField>({"x", "y"}, PrimeField(1, 5));
  auto H = make_ring<PrimeField>({"x", "y"}, PrimeField(1, 7));
  EXPECT_THROW(var(G, "x") * var(H, "y"), ContextMismatch);
}

TEST(RingMap, ComposesAndApplies) {
  auto R = ring4();
  auto T = make_ring<Rational>({"x", "y", "w", "u"}, Rational(1));
  auto phi = RingMap<Rational>::from_assignments(R, T, {{"x", var(T, "x")}, {"y", var(T, "y")}, {"w", var(T, "w")}});
  auto z = var(R, "z"), x = var(R, "x");
  EXPECT_TRUE(phi(z).is_zero());
  EXPECT_EQ(phi(x * x), var(T, "x") * var(T, "x"));
  EXPECT_TRUE(phi.is_graded());
  auto swap = RingMap<Rational>(R, R, {var(R, "y"), var(R, "x"), var(R, "z"), var(R, "w")});
  EXPECT_EQ(phi.after(swap)(x), var(T, "y"));
  EXPECT_THROW(RingMap<Rational>(R, T, {var(T, "x")}), ContextMismatch);
}

TEST(Polynomial, WorksOverEveryCoefficientType) {
  auto G = make_ring<PrimeField>({"x", "y"}, PrimeField(1, 5));
  auto gx = var(G, "x");
  EXPECT_TRUE((gx * PrimeField(5, 5)).is_zero());
  auto Q = make_ring<QT>({"x"}, QT(1));
  auto qx = var(Q, "x");
  EXPECT_EQ((qx * QT::t()).to_string(), "t*x");
  auto D = make_ring<Dual<Rational>>({"x"}, Dual<Rational>(Rational(1)));
  auto e = Polynomial<Dual<Rational>>::constant(D, Dual<Rational>::eps(Rational(1)));
  EXPECT_TRUE((e * e * var(D, "x")).is_zero());
}
