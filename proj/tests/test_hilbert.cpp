#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;

TEST(Hilbert, ProjectiveSpace) {
  auto R = plane_ring(Rational(1));
  HilbertData h = hilbert_series(Ideal<Rational>(R));
  EXPECT_EQ(h.polynomial.degree(), 3);
  EXPECT_EQ(h.function(2), 10);
  EXPECT_EQ(h.polynomial(5), Rational(56));
  EXPECT_THROW(degree_genus(h), NotACurve);
}

TEST(Hilbert, PlaneCubicAndTwistedCubic) {
  auto R = plane_ring(Rational(1));
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z"), w = var(R, "w");
  HilbertData cubic = hilbert_series(Ideal<Rational>(R, {z, x.pow(3) + x * x * w - y * y * w}));
  EXPECT_EQ(cubic.polynomial.to_string(), "3*t");
  auto dg = degree_genus(cubic);
  EXPECT_EQ(dg.degree, Rational(3));
  EXPECT_EQ(dg.genus, Rational(1));
  HilbertData tc = hilbert_series(Ideal<Rational>(R, {x * z - y * y, y * w - z * z, x * w - y * z}));
  EXPECT_EQ(tc.polynomial, HilbertPolynomial::linear(3, 1));
  EXPECT_EQ(degree_genus(tc).genus, Rational(0));
  EXPECT_EQ(tc.regularity_index, 0);
}

TEST(Hilbert, EmbeddedPointShiftsTheConstant) {
  auto R = plane_ring(Rational(1));
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z"), w = var(R, "w");
  auto q = x.pow(3) + x * x * w - y * y * w;
  HilbertData h = hilbert_series(Ideal<Rational>(R, {x * z, y * z, z * z, q}));
  EXPECT_EQ(h.polynomial.to_string(), "3*t + 1");
}

TEST(Hilbert, FunctionMatchesStandardMonomialCount) {
  auto R = curve_ring(Rational(1));
  Ideal<Rational> I(R, catalog_curve_generators(CaseLabel::V, R));
  for (int t = 0; t <= 6; ++t)
    EXPECT_EQ(hilbert_function(I, t), static_cast<long>(standard_monomials(I, t).size())) << t;
}

TEST(Hilbert, ZeroDimensionalAndUnit) {
  auto R = make_ring<Rational>({"x", "y", "z"}, Rational(1));
  auto x = var(R, "x"), y = var(R, "y"), z = var(R, "z");
  HilbertData pts = hilbert_series(Ideal<Rational>(R, {x * x, y * y, z}));
  // every variable is nilpotent: projectively empty
  EXPECT_EQ(pts.polynomial.degree(), -1);
  EXPECT_EQ(pts.function(1), 2);
  EXPECT_EQ(pts.function(2), 1);
  EXPECT_EQ(pts.function(5), 0);
  HilbertData dbl = hilbert_series(Ideal<Rational>(R, {x * x, y}));
  EXPECT_EQ(dbl.polynomial.to_string(), "2");
  HilbertData unit = hilbert_series(Ideal<Rational>(R, {Polynomial<Rational>::constant(R, 1)}));
  EXPECT_EQ(unit.function(0), 0);
}

TEST(Hilbert, PolynomialPrinting) {
  EXPECT_EQ(HilbertPolynomial::linear(3, 1).to_string(), "3*t + 1");
  EXPECT_EQ(HilbertPolynomial::linear(6, -3).to_string(), "6*t - 3");
  EXPECT_EQ(HilbertPolynomial({Rational(0), Rational(7, 2), Rational(1, 2)}).to_string(), "1/2*t^2 + 7/2*t");
  EXPECT_EQ(HilbertPolynomial({Rational(4)}).to_string(), "4");
}

TEST(Hilbert, FieldIndependence) {
  for (CaseLabel c : all_cases()) {
    auto RQ = curve_ring(Rational(1));
    auto R5 = curve_ring(PrimeField(1, 5));
    auto R7 = curve_ring(PrimeField(1, 7));
    auto hq = hilbert_series(Ideal<Rational>(RQ, catalog_curve_generators(c, RQ)));
    auto h5 = hilbert_series(Ideal<PrimeField>(R5, catalog_curve_generators(c, R5)));
    auto h7 = hilbert_series(Ideal<PrimeField>(R7, catalog_curve_generators(c, R7)));
    EXPECT_EQ(hq.polynomial, h5.polynomial);
    EXPECT_EQ(hq.polynomial, h7.polynomial);
    EXPECT_EQ(hq.numerator, h5.numerator);
  }
}
