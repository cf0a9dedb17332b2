#include "chaosrates/coherent_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "chaosrates/special_functions.hpp"
#include "oracles.hpp"

namespace chaosrates {
namespace {

CoherentModel exp_model(int n, double rate = 0.1) {
  return CoherentModel(n, StructureFunction::exponential(rate));
}

TEST(ChaosMartingaleTest, BoundaryConventions) {
  EXPECT_EQ(chaos_martingale(0, 1.3, 0.4), 1.0);
  EXPECT_EQ(chaos_martingale(-1, 1.3, 0.4), 0.0);
  EXPECT_EQ(chaos_martingale(1, 1.3, 0.4), 1.3);
  EXPECT_NEAR(chaos_martingale(2, 1.3, 0.4), 0.5 * (1.69 - 0.4), 1e-15);
}

TEST(ChaosMartingaleTest, MatchesHermiteRoute) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> q(0.01, 1.0), r(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double Q = q(rng), R = r(rng) * std::sqrt(Q);
    for (int m = 1; m <= 10; ++m) {
      const double a = chaos_martingale(m, R, Q);
      const double b = chaos_martingale_hermite(m, R, Q);
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::abs(b))) << m;
      EXPECT_NEAR(chaos_martingale_polynomial(m, Q)(R), a, 1e-12 * std::max(1.0, std::abs(a)));
    }
  }
}

TEST(KernelTest, InitialValueIsInverseFactorial) {
  EXPECT_EQ(exp_model(2).initial_kernel(), 0.5);
  for (int n = 1; n <= 8; ++n) {
    const auto model = exp_model(n);
    EXPECT_NEAR(kernel_value(n, model.state(0.0, 0.0)), 1.0 / factorial(n), 1e-15);
  }
}

TEST(KernelTest, SecondAndThirdOrderClosedForms) {
  for (double Q : {0.1, 0.5, 0.9}) {
    for (double R : {-1.2, 0.0, 0.7}) {
      const GaussianState s{1.0, R, Q};
      EXPECT_NEAR(kernel_value(2, s), (1 - Q) * (R * R - Q) + 0.5 * (1 - Q * Q), 1e-14);
      const double pi3 = 6 * (1 - Q) * chaos_martingale(4, R, Q) +
                         (1 - Q * Q) * chaos_martingale(2, R, Q) + (1 - Q * Q * Q) / 6;
      EXPECT_NEAR(kernel_value(3, s), pi3, 1e-14);
    }
  }
}

TEST(KernelTest, EqualsConditionalVarianceByQuadrature) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> q(0.0, 0.95), z(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double Q = q(rng), R = z(rng) * std::sqrt(Q);
    for (int n = 1; n <= 5; ++n) {
      const double oracle = oracles::conditional_variance_gh(n, R, Q);
      EXPECT_NEAR(kernel_value(n, GaussianState{1.0, R, Q}), oracle,
                  1e-11 * std::max(1.0, oracle));
    }
  }
}

TEST(KernelTest, PolynomialFormAgreesWithValue) {
  const auto model = exp_model(4);
  const auto s = model.state(3.0, 0.4);
  const auto kv = pricing_kernel(model, s);
  EXPECT_EQ(kv.as_polynomial.degree(), 6);
  EXPECT_NEAR(kv.as_polynomial(s.R), kv.pi, 1e-15);
}

TEST(KernelTest, PositiveOnRandomStates) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> q(0.0, 0.999), r(-8.0, 8.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const GaussianState s{1.0, r(rng), q(rng)};
    for (int n = 1; n <= 6; ++n) EXPECT_GT(kernel_value(n, s), 0.0);
  }
}

TEST(BondPriceTest, InitialCurveAndTerminalValue) {
  for (int n = 1; n <= 5; ++n) {
    const auto model = exp_model(n);
    const auto s0 = model.state(0.0, 0.0);
    for (double T : {0.5, 3.0, 10.0, 40.0}) {
      const double q = model.structure().q_at(T);
      EXPECT_NEAR(bond_price(model, s0, T), 1.0 - std::pow(q, n), 1e-14);
      EXPECT_NEAR(model.initial_bond_price(T), 1.0 - std::pow(q, n), 1e-15);
    }
    EXPECT_EQ(bond_price(model, model.state(2.0, 0.3), 2.0), 1.0);
    EXPECT_THROW(bond_price(model, model.state(2.0, 0.3), 1.0), std::invalid_argument);
  }
}

TEST(BondPriceTest, IsConditionalExpectationOfFutureKernel) {
  const auto rule = oracles::gauss_hermite(60);
  const auto model = exp_model(3, 0.2);
  const auto& sf = model.structure();
  for (double R : {-1.0, 0.2, 1.5}) {
    const double t = 2.0, T = 6.0;
    const auto s = model.state(t, R);
    const double qT = sf.q_at(T), sd = std::sqrt(qT - s.Q);
    const double expected = oracles::gh_expect(rule, [&](double z) {
      return kernel_value(3, GaussianState{T, R + sd * z, qT});
    });
    EXPECT_NEAR(bond_price(model, s, T), expected / kernel_value(3, s), 1e-12);
  }
}

TEST(BondPriceTest, DecreasingInMaturityAndBounded) {
  const auto model = exp_model(3);
  std::mt19937_64 rng(14);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 200; ++trial) {
    const double t = 1.0 + 9.0 * (trial % 10) / 10.0;
    const auto s = model.state(t, z(rng) * std::sqrt(model.structure().q_at(t)));
    double prev = 1.0;
    for (double T = t + 0.5; T < 60.0; T += 2.5) {
      const double p = bond_price(model, s, T);
      EXPECT_GT(p, 0.0);
      EXPECT_LE(p, prev + 1e-15);
      prev = p;
    }
  }
}

TEST(ShortRateTest, MatchesSlopeOfBondCurveAtValuationTime) {
  for (int n = 1; n <= 4; ++n) {
    const auto model = exp_model(n, 0.15);
    for (double R : {-0.8, 0.0, 1.1}) {
      const auto s = model.state(4.0, R);
      const double h = 1e-5;
      const double slope = -(bond_price(model, s, 4.0 + h) - 1.0) / h;
      EXPECT_NEAR(short_rate(model, s), slope, 1e-5) << n;
      EXPECT_GE(short_rate(model, s), 0.0);
    }
  }
}

TEST(RiskPremiumTest, IsMinusKernelLogVolatility) {
  for (int n = 1; n <= 4; ++n) {
    const auto model = exp_model(n, 0.15);
    const auto s = model.state(4.0, 0.6);
    const double h = 1e-6;
    const double dpi = (kernel_value(n, GaussianState{s.t, s.R + h, s.Q}) -
                        kernel_value(n, GaussianState{s.t, s.R - h, s.Q})) /
                       (2 * h);
    const double expected = -model.structure().phi(s.t) * dpi / kernel_value(n, s);
    EXPECT_NEAR(risk_premium(model, s), expected, 1e-7) << n;
  }
}

TEST(ShortRateTest, DegenerateAndAtomCases) {
  const auto model = exp_model(2);
  EXPECT_THROW(short_rate(model, GaussianState{1.0, 0.0, 1.0}), std::domain_error);
  EXPECT_THROW(risk_premium(model, GaussianState{1.0, 0.0, 1.0}), std::domain_error);
  const CoherentModel atoms(2, StructureFunction::atoms({1.0, 2.0}, {0.5, 0.5}));
  EXPECT_EQ(short_rate(atoms, atoms.state(1.5, 0.1)), 0.0);
  EXPECT_EQ(risk_premium(atoms, atoms.state(1.5, 0.1)), 0.0);
}

TEST(CoherentModelTest, RejectsOrderOutsideRange) {
  EXPECT_THROW(exp_model(0), std::invalid_argument);
  EXPECT_THROW(exp_model(kMaxChaosOrder + 1), std::invalid_argument);
}

}  // namespace
}  // namespace chaosrates
