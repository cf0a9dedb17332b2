#include "chaosrates/structure_function.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace chaosrates {
namespace {

TEST(StructureFunctionTest, ExponentialIsNormalised) {
  const auto sf = StructureFunction::exponential(0.1);
  EXPECT_NEAR(sf.q_at(10.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(sf.q_at(10.0) + sf.tail(10.0), 1.0, 1e-15);
  EXPECT_EQ(sf.q_at(0.0), 0.0);
  EXPECT_NEAR(sf.density(0.0), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(sf.normalisation_scale(), 1.0);
}

TEST(StructureFunctionTest, ExponentialAmplitudeIsRescaledAway) {
  // Density lambda^{-1} e^{-lambda s} has mass lambda^{-2}.
  const auto sf = StructureFunction::exponential(0.1, 10.0);
  EXPECT_NEAR(sf.normalisation_scale(), 100.0, 1e-12);
  EXPECT_NEAR(sf.q_at(10.0), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(StructureFunctionTest, PiecewiseNormalisesAndIntegrates) {
  const auto sf = StructureFunction::piecewise({0.0, 1.0, 3.0}, {2.0, 1.0});
  EXPECT_NEAR(sf.normalisation_scale(), 4.0, 1e-15);
  EXPECT_NEAR(sf.q_at(1.0), 0.5, 1e-15);
  EXPECT_NEAR(sf.q_at(2.0), 0.75, 1e-15);
  EXPECT_NEAR(sf.q_at(5.0), 1.0, 1e-15);
  EXPECT_NEAR(sf.tail(2.0), 0.25, 1e-15);
  EXPECT_NEAR(sf.density(1.5), 0.25, 1e-15);
}

TEST(StructureFunctionTest, AtomsGiveRightContinuousSteps) {
  const auto sf = StructureFunction::atoms({1.0, 4.0, 9.0}, {1.0 / 6, 0.5, 1.0 / 3});
  EXPECT_EQ(sf.q_at(0.999), 0.0);
  EXPECT_NEAR(sf.q_at(1.0), 1.0 / 6, 1e-16);
  EXPECT_NEAR(sf.q_at(4.0), 2.0 / 3, 1e-15);
  EXPECT_NEAR(sf.q_at(9.0), 1.0, 1e-15);
  EXPECT_FALSE(sf.has_density());
  EXPECT_THROW(sf.density(1.0), std::logic_error);
}

TEST(StructureFunctionTest, RejectsInvalidInput) {
  EXPECT_THROW(StructureFunction::exponential(0.0), std::invalid_argument);
  EXPECT_THROW(StructureFunction::piecewise({0.0, 1.0}, {0.0}), std::invalid_argument);
  EXPECT_THROW(StructureFunction::piecewise({1.0, 0.5}, {1.0}), std::invalid_argument);
  EXPECT_THROW(StructureFunction::atoms({1.0, 2.0}, {0.5, 0.4}), std::invalid_argument);
  EXPECT_THROW(StructureFunction::atoms({2.0, 1.0}, {0.5, 0.5}), std::invalid_argument);
}

double simpson_overlap(const StructureFunction& a, const StructureFunction& b, double lo, double hi) {
  const int steps = 200000;
  const double h = (hi - lo) / steps;
  double s = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double x = lo + h * i;
    const double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
    s += w * a.phi(x) * b.phi(x);
  }
  return s * h / 3;
}

TEST(OverlapTest, ClosedFormsMatchQuadrature) {
  const auto e1 = StructureFunction::exponential(0.3);
  const auto e2 = StructureFunction::exponential(0.05);
  const auto p = StructureFunction::piecewise({0.5, 2.0, 6.0}, {1.0, 0.2});
  EXPECT_NEAR(overlap_integral(e1, e2, 1.0, 7.0), simpson_overlap(e1, e2, 1.0, 7.0), 1e-10);
  // Split at the jumps in p, stopping just short of each from the left.
  const double pe = simpson_overlap(p, e1, 1.0, std::nextafter(2.0, 0.0)) +
                    simpson_overlap(p, e1, 2.0, std::nextafter(6.0, 0.0));
  EXPECT_NEAR(overlap_integral(p, e1, 1.0, 8.0), pe, 1e-9);
  EXPECT_NEAR(overlap_integral(e1, p, 1.0, 8.0), pe, 1e-9);
  EXPECT_NEAR(overlap_integral(p, p, 0.0, ExtendedReal::plus_infinity()), 1.0, 1e-14);
}

TEST(OverlapTest, SelfOverlapIsTail) {
  const auto sf = StructureFunction::exponential(0.2);
  EXPECT_NEAR(overlap_integral(sf, sf, 3.0, ExtendedReal::plus_infinity()), sf.tail(3.0), 1e-15);
}

TEST(OverlapTest, CauchySchwarzHolds) {
  const auto a = StructureFunction::exponential(0.4);
  const auto b = StructureFunction::piecewise({0.0, 1.0, 10.0}, {3.0, 0.5});
  for (double t : {0.0, 0.5, 2.0, 5.0}) {
    const double ab = overlap_integral(a, b, t, ExtendedReal::plus_infinity());
    EXPECT_LE(ab * ab, a.tail(t) * b.tail(t) * (1 + 1e-12)) << t;
  }
}

TEST(OverlapTest, AtomsPairOnlyAtCoincidentTimes) {
  const auto a = StructureFunction::atoms({1.0, 2.0}, {0.25, 0.75});
  const auto b = StructureFunction::atoms({2.0, 3.0}, {0.36, 0.64});
  EXPECT_NEAR(overlap_integral(a, b, 0.0, ExtendedReal::plus_infinity()), std::sqrt(0.75 * 0.36),
              1e-15);
  EXPECT_EQ(overlap_integral(a, b, 2.0, ExtendedReal::plus_infinity()), 0.0);
  EXPECT_THROW(overlap_integral(a, StructureFunction::exponential(1.0), 0.0, 1.0),
               std::invalid_argument);
}

TEST(OverlapTest, CrossInnerProductPowers) {
  const auto a = StructureFunction::exponential(0.4);
  const auto b = StructureFunction::exponential(0.1);
  const double first = overlap_integral(a, b, 1.0, ExtendedReal::plus_infinity());
  EXPECT_EQ(cross_inner_product(a, b, 1.0, 0), 1.0);
  EXPECT_NEAR(cross_inner_product(a, b, 1.0, 3), first * first * first / 6, 1e-15);
}

TEST(GaussianStateTest, ValidatesFields) {
  const auto sf = StructureFunction::exponential(0.1);
  const auto s = GaussianState::at(sf, 2.0, 0.3);
  EXPECT_NEAR(s.Q, sf.q_at(2.0), 0.0);
  EXPECT_THROW(GaussianState::at(sf, -1.0, 0.0), std::invalid_argument);
  EXPECT_THROW((GaussianState{1.0, 0.0, 1.5}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace chaosrates
