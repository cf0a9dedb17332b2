#include "chaosrates/coherent_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chaosrates {

namespace {

// 1 - q^k as (1 - q)(1 + q + ... + q^{k-1}).
double one_minus_power(double q, int k) {
  double geometric = 0.0;
  double term = 1.0;
  for (int j = 0; j < k; ++j) {
    geometric += term;
    term *= q;
  }
  return (1.0 - q) * geometric;
}

// Coefficient of R^{m-2k} Q^k in X^{(m)}: (-1)^k / (k! (m-2k)! 2^k).
double martingale_coefficient(int m, int k) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign / (factorial(k) * factorial(m - 2 * k) * std::ldexp(1.0, k));
}

void check_order(int n) {
  if (n < 1 || n > kMaxChaosOrder) {
    throw std::invalid_argument("chaos order must lie in [1, " + std::to_string(kMaxChaosOrder) +
                                "]");
  }
}

void check_live(const GaussianState& state) {
  if (state.Q >= 1.0) throw std::domain_error("pricing kernel is degenerate at Q_t = 1");
}

}  // namespace

CoherentModel::CoherentModel(int order, StructureFunction sf) : order_(order), sf_(std::move(sf)) {
  check_order(order_);
}

double CoherentModel::initial_kernel() const { return 1.0 / factorial(order_); }

double CoherentModel::initial_bond_price(double T) const {
  return one_minus_power(sf_.q_at(T), order_);
}

double chaos_martingale(int m, double R, double Q) {
  if (m < 0) return 0.0;
  if (m == 0) return 1.0;
  double sum = 0.0;
  for (int k = 0; 2 * k <= m; ++k) {
    sum += martingale_coefficient(m, k) * std::pow(R, m - 2 * k) * std::pow(Q, k);
  }
  return sum;
}

double chaos_martingale(const CoherentModel& /*model*/, int m, const GaussianState& state) {
  return chaos_martingale(m, state.R, state.Q);
}

double chaos_martingale_hermite(int m, double R, double Q) {
  if (m < 0) return 0.0;
  if (m == 0) return 1.0;
  if (!(Q > 0.0)) throw std::domain_error("chaos_martingale_hermite: requires Q > 0");
  const double s = std::sqrt(Q);
  return std::pow(s, m) * hermite_value(m, R / s) / factorial(m);
}

RealPolynomial chaos_martingale_polynomial(int m, double Q) {
  if (m < 0) return {};
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  for (int k = 0; 2 * k <= m; ++k) {
    c[static_cast<std::size_t>(m - 2 * k)] = martingale_coefficient(m, k) * std::pow(Q, k);
  }
  return RealPolynomial(std::move(c));
}

double kernel_coefficient(int n, int k, double q) {
  if (k < 0 || k > n) return 0.0;
  const int j = n - k;
  // [2j]! / (j!)^2 = C(2j, j), exact for j <= 20.
  return static_cast<double>(binomial(2 * j, j)) * one_minus_power(q, k) / factorial(k);
}

RealPolynomial kernel_numerator_polynomial(int n, double q_state, double q_weight) {
  check_order(n);
  RealPolynomial out;
  for (int k = 1; k <= n; ++k) {
    out += kernel_coefficient(n, k, q_weight) * chaos_martingale_polynomial(2 * n - 2 * k, q_state);
  }
  return out;
}

double kernel_numerator(int n, double R, double q_state, double q_weight) {
  check_order(n);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) {
    sum += kernel_coefficient(n, k, q_weight) * chaos_martingale(2 * n - 2 * k, R, q_state);
  }
  return sum;
}

KernelValue pricing_kernel(const CoherentModel& model, const GaussianState& state) {
  state.validate();
  return {kernel_value(model.order(), state),
          kernel_numerator_polynomial(model.order(), state.Q, state.Q)};
}

double kernel_value(int n, const GaussianState& state) {
  return kernel_numerator(n, state.R, state.Q, state.Q);
}

double bond_price(const CoherentModel& model, const GaussianState& state, double T) {
  state.validate();
  if (T < state.t) throw std::invalid_argument("bond_price: maturity precedes valuation time");
  if (T == state.t) return 1.0;
  const int n = model.order();
  const double q_T = model.structure().q_at(T);
  return kernel_numerator(n, state.R, state.Q, q_T) / kernel_numerator(n, state.R, state.Q, state.Q);
}

double short_rate(const CoherentModel& model, const GaussianState& state) {
  state.validate();
  check_live(state);
  const auto& sf = model.structure();
  if (!sf.has_density()) return 0.0;
  const double density = sf.density(state.t);
  if (density == 0.0) return 0.0;

  const int n = model.order();
  double drift = 0.0;
  for (int k = 1; k <= n; ++k) {
    const int j = n - k;
    drift += static_cast<double>(binomial(2 * j, j)) * std::pow(state.Q, k - 1) *
             chaos_martingale(2 * j, state.R, state.Q) / factorial(k - 1);
  }
  return density * drift / kernel_value(n, state);
}

double risk_premium(const CoherentModel& model, const GaussianState& state) {
  state.validate();
  check_live(state);
  const auto& sf = model.structure();
  if (!sf.has_density()) return 0.0;
  const double phi = sf.phi(state.t);
  if (phi == 0.0) return 0.0;

  const int n = model.order();
  double vol = 0.0;
  for (int k = 1; k <= n; ++k) {
    vol += kernel_coefficient(n, k, state.Q) * chaos_martingale(2 * n - 2 * k - 1, state.R, state.Q);
  }
  return -phi * vol / kernel_value(n, state);
}

}  // namespace chaosrates
