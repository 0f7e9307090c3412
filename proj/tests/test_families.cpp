#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;

namespace {

Polynomial<Rational> nodal_cubic(const RingPtr<Rational>& S) {
  auto x = var(S, "x"), y = var(S, "y"), w = var(S, "w");
  return x.pow(3) + x * x * w - y * y * w;
}

} // namespace

TEST(Family, SyzygyIdentityExpandsToZero) {
  EXPECT_TRUE(syzygy_identity_check());
  EXPECT_TRUE(syzygy_identity_check_over(Rational(1)));
  EXPECT_TRUE(syzygy_identity_check_over(PrimeField(1, 7)));
  EXPECT_TRUE(syzygy_identity_check_over(PrimeField(1, 5)));
}

TEST(Family, PerturbedGeneratorBreaksTheIdentity) {
  EXPECT_FALSE(syzygy_identity_check(true));
  EXPECT_FALSE(syzygy_identity_check_over(Rational(1), true));
}

TEST(Family, FiberAtZeroHasTheEmbeddedPoint) {
  Ideal<Rational> Z0 = fiber_at(nodal_family_ideal(), Rational(0));
  auto S = Z0.ring();
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  auto q = nodal_cubic(S);
  EXPECT_EQ(Z0, Ideal<Rational>(S, {x * z, y * z, z * z, q}));
  EXPECT_EQ(saturate(Z0, Ideal<Rational>(S, {x, y, z})), Ideal<Rational>(S, {z, q}));
  EXPECT_EQ(hilbert_series(Z0).polynomial.to_string(), "3*t + 1");
}

TEST(Family, NodalFamilyIsFlat) {
  FlatnessReport r = flatness_probe(nodal_family_ideal(), {Rational(0), Rational(1), Rational(-2)});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.generic_hp, "3*t + 1");
  ASSERT_EQ(r.sample_hp.size(), 3u);
  for (const auto& [c, hp] : r.sample_hp) EXPECT_EQ(hp, "3*t + 1") << c.to_string();
}

TEST(Family, JumpingFamilyIsCaught) {
  FlatnessReport r = flatness_probe(jumping_family(), {Rational(0), Rational(1)});
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.generic_hp, "6*t - 3");
  EXPECT_EQ(r.sample_hp[0].second, "1/2*t^2 + 7/2*t");
  EXPECT_EQ(r.sample_hp[1].second, "6*t - 3");
}

TEST(Family, GenericImageOfTheDoubleLineFamily) {
  ParametricIdeal P = double_line_family();
  auto S = plane_ring(QT());
  ParametricIdeal img = generic_image(P, standard_projection(S, P.ideal.ring()));
  auto x = var(S, "x"), y = var(S, "y"), z = var(S, "z");
  auto t = Polynomial<QT>::constant(S, QT::t());
  EXPECT_EQ(img.ideal, Ideal<QT>(S, {z, x.pow(3) + t * x * x * y}));
  EXPECT_TRUE(img.exclusions.empty());
  Ideal<Rational> at0 = fiber_at(img, Rational(0));
  auto R = at0.ring();
  EXPECT_EQ(at0, Ideal<Rational>(R, {var(R, "z"), var(R, "x").pow(3)}));
}

TEST(Family, InvertedCoefficientsBecomeExclusions) {
  // the kernel computation must divide by t - 1 here
  auto T = make_ring<QT>({"x", "y", "w", "u"}, QT());
  auto S = plane_ring(QT());
  auto x = var(T, "x"), y = var(T, "y"), u = var(T, "u");
  auto c = Polynomial<QT>::constant(T, QT::t() - QT(1));
  ParametricIdeal P(Ideal<QT>(T, {c * x * u - y * y, u * u}));
  ParametricIdeal img = generic_image(P, standard_projection(S, T));
  EXPECT_TRUE(img.excluded(Rational(1)));
  EXPECT_THROW(fiber_at(img, Rational(1)), ExcludedParameter);
}

TEST(Family, DenominatorsAreRejected) {
  auto T = make_ring<QT>({"x"}, QT());
  auto inv = Polynomial<QT>::constant(T, QT(1) / QT::t());
  EXPECT_THROW(ParametricIdeal(Ideal<QT>(T, {inv * var(T, "x")})), Error);
}

TEST(Family, SpecializedMap) {
  auto S = plane_ring(QT());
  auto T = curve_ring(QT());
  auto t = Polynomial<QT>::constant(T, QT::t());
  RingMap<QT> m(S, T, {var(T, "x"), var(T, "y"), t * var(T, "u"), var(T, "w")});
  RingMap<Rational> m2 = specialize_map(m, Rational(3));
  EXPECT_EQ(m2.image(2).to_string(), "3*u");
}

TEST(Degenerations, ClassificationAlongTheDoubleLineFamily) {
  ParametricIdeal P = double_line_family();
  EXPECT_EQ(classify_fiber(P, Rational(1)), CaseLabel::VIII);
  EXPECT_EQ(classify_fiber(P, Rational(2)), CaseLabel::VIII);
  EXPECT_EQ(classify_fiber(P, Rational(0)), CaseLabel::IX);
}

TEST(Degenerations, TableIsConfirmedAndSelfLoopRejected) {
  auto results = degeneration_chart_check();
  ASSERT_EQ(results.size(), 6u);
  for (const auto& r : results) {
    if (r.name == "constant triple line") {
      EXPECT_FALSE(r.confirmed);
      EXPECT_EQ(r.detail.rfind("self-loop", 0), 0u);
    } else {
      EXPECT_TRUE(r.confirmed) << r.name << ": " << r.detail;
      EXPECT_TRUE(r.flat);
    }
  }
  EXPECT_TRUE(results[0].documented);
}
