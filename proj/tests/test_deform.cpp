#include <gtest/gtest.h>

#include "cmtwist/cmtwist.hpp"

using namespace cmtwist;

namespace {

template <Scalar K>
Ideal<K> triple_line(const K& proto) {
  auto T = curve_ring(proto);
  return Ideal<K>(T, catalog_curve_generators(CaseLabel::IX, T));
}

} // namespace

TEST(Deform, TripleLineHasTwelveDirections) {
  DeformationBasis<Rational> db = embedded_deformations(triple_line(Rational(1)));
  EXPECT_EQ(db.dimension(), 12u);
  EXPECT_EQ(db.syzygies.syzygies.size(), 2u);
  // each quadric slot is (S/I)_2, which has HF(2) = 7 elements
  EXPECT_EQ(db.slot_count(), 21u);
  for (const auto& b : db.basis) EXPECT_TRUE(db.satisfies_lifting(b));
}

TEST(Deform, WitnessesLiftOverDualNumbers) {
  DeformationBasis<Rational> db = embedded_deformations(triple_line(Rational(1)));
  ASSERT_EQ(db.witnesses.size(), db.basis.size());
  for (std::size_t k = 0; k < db.basis.size(); ++k)
    for (std::size_t s = 0; s < db.syzygies.syzygies.size(); ++s)
      EXPECT_TRUE(dual_syzygy_vanishes(db.generators, db.basis[k], db.syzygies.syzygies[s], db.witnesses[k][s]));
}

TEST(Deform, CoordinatesRoundTrip) {
  DeformationBasis<Rational> db = embedded_deformations(triple_line(Rational(1)));
  for (const auto& b : db.basis) EXPECT_EQ(db.tuple_from(db.coordinates(b)), b);
}

TEST(Deform, NonLiftingDirectionIsRejected) {
  auto I = triple_line(Rational(1));
  DeformationBasis<Rational> db = embedded_deformations(I);
  auto T = I.ring();
  auto w = var(T, "w");
  // moving only u^2 to u^2 + eps*w^2 does not lift
  std::vector<Polynomial<Rational>> h{Polynomial<Rational>(T), Polynomial<Rational>(T), w * w};
  EXPECT_FALSE(db.satisfies_lifting(h));
}

TEST(Deform, EveryCatalogCurveOverEveryField) {
  for (CaseLabel c : all_cases()) {
    auto TQ = curve_ring(Rational(1));
    auto T7 = curve_ring(PrimeField(1, 7));
    EXPECT_EQ(embedded_deformations(Ideal<Rational>(TQ, catalog_curve_generators(c, TQ))).dimension(), 12u) << roman(c);
    EXPECT_EQ(embedded_deformations(Ideal<PrimeField>(T7, catalog_curve_generators(c, T7))).dimension(), 12u) << roman(c);
  }
}

TEST(Deform, HypersurfaceDeformations) {
  auto R = make_ring<Rational>({"x", "y"}, Rational(1));
  EXPECT_EQ(embedded_deformations(Ideal<Rational>(R, {var(R, "x")})).dimension(), 1u);
}

TEST(Resolution, CatalogCurvesPassAndOthersFail) {
  for (CaseLabel c : all_cases()) {
    auto T = curve_ring(Rational(1));
    Ideal<Rational> I(T, catalog_curve_generators(c, T));
    EXPECT_TRUE(resolution_check(I)) << roman(c);
    RegularityReport r = regularity_check(I);
    EXPECT_TRUE(r.pass) << roman(c);
    EXPECT_EQ(r.values[1], 4);
    EXPECT_EQ(r.values[8], 25);
  }
  auto T = curve_ring(Rational(1));
  auto x = var(T, "x"), y = var(T, "y");
  EXPECT_FALSE(resolution_check(Ideal<Rational>(T, {x * x, y * y * y})));
  RegularityReport empty = regularity_check(Ideal<Rational>(T));
  EXPECT_FALSE(empty.pass);
  EXPECT_EQ(empty.values[2], 10);
}

TEST(Tangent, DimensionsOverRationals) {
  TangentReport<Rational> tr = cm_tangent_triple_line(Rational(1));
  EXPECT_EQ(tr.raw_count, 28u);
  EXPECT_EQ(tr.action_rank, 16u);
  EXPECT_EQ(tr.quotient_dimension, 12u);
  EXPECT_EQ(tr.deformation_dimension, 12u);
  EXPECT_TRUE(tr.family_contained);
  EXPECT_TRUE(tr.third_generator_forced);
  EXPECT_EQ(tr.invariant_basis.size(), 12u);
}

TEST(Tangent, SameDimensionsOverPrimeFields) {
  for (std::uint32_t p : {5u, 7u}) {
    TangentReport<PrimeField> tr = cm_tangent_triple_line(PrimeField(1, p));
    EXPECT_EQ(tr.raw_count, 28u);
    EXPECT_EQ(tr.action_rank, 16u);
    EXPECT_EQ(tr.quotient_dimension, 12u);
  }
}

TEST(Tangent, ListedFunctionals) {
  TangentReport<Rational> tr = cm_tangent_triple_line(Rational(1));
  ASSERT_EQ(tr.listed_functionals.size(), 12u);
  EXPECT_EQ(tr.listed_rank, 12u);
  std::vector<std::string> failing;
  for (const auto& f : tr.listed_functionals)
    if (!f.invariant) failing.push_back(f.name);
  // b4 - a6 moves under x -> x + eps*s*u; its neighbour b3 - a6 does not
  EXPECT_EQ(failing, std::vector<std::string>{"b4 - a6"});
  EXPECT_FALSE(tr.listed_span_matches);
  ASSERT_EQ(tr.repairs.size(), 1u);
  EXPECT_EQ(tr.repairs[0].first, "b4 - a6");
  EXPECT_NE(tr.repairs[0].second.find("b3"), std::string::npos);
}

TEST(Tangent, InvariantBasisAnnihilatesTheAction) {
  TangentReport<PrimeField> tr = cm_tangent_triple_line(PrimeField(1, 7));
  for (const auto& f : tr.invariant_basis) EXPECT_EQ(f.size(), 28u);
  EXPECT_EQ(rank_of(tr.invariant_basis, 28, PrimeField(1, 7)), 12u);
}
