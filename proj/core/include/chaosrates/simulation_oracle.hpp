#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "chaosrates/coherent_model.hpp"
#include "chaosrates/incoherent_model.hpp"
#include "chaosrates/polynomial.hpp"
#include "chaosrates/polynomial_pricer.hpp"

namespace chaosrates {

/// Euler path of the nested system dX^{(j)} = X^{(j-1)} phi(t) dW, j = 1..m,
/// recorded every `stride` steps (and at the horizon).
struct ChaosPath {
  std::vector<double> times;
  /// R_t accumulated with the same increments as the X^{(j)}.
  std::vector<double> R;
  /// Exact Q_t.
  std::vector<double> Q;
  /// X[j][i] is X^{(j)} at times[i], j = 0..m.
  std::vector<std::vector<double>> X;
};

/// Rejects atom families (std::invalid_argument), dt <= 0, m < 1.
ChaosPath simulate_chaos_sde(const CoherentModel& model, int m, double horizon, double dt,
                             std::uint64_t seed, std::size_t stride = 1);

/// Unit payment at maturity.
struct BondSpec {
  double maturity = 0.0;
};

using Contract = std::variant<BondSpec, OptionSpec, SwaptionSpec>;

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// E[pi_t H_t] / pi_0 from the exact Gaussian law at the contract's expiry,
/// in batches of 8192 samples with one random stream per batch.
McEstimate mc_price(const CoherentModel& model, const Contract& contract, std::size_t samples,
                    std::uint64_t seed);
McEstimate mc_price(const IncoherentModel& model, const Contract& contract, std::size_t samples,
                    std::uint64_t seed);

/// Var_t(X_inf) sampled from the conditional law of the terminal drivers.
/// The standard error uses the sample fourth central moment.
McEstimate mc_conditional_variance(const CoherentModel& model, const GaussianState& state,
                                   std::size_t samples, std::uint64_t seed);
McEstimate mc_conditional_variance(const IncoherentModel& model, const MultiGaussianState& state,
                                   std::size_t samples, std::uint64_t seed);

/// Adaptive Simpson over [a, b] split into `panels` equal starting pieces,
/// absolute tolerance shared across them.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tolerance, int panels = 16);

/// n! * int_{-12}^{12} (P(z))^+ rho(z) dz to absolute tolerance 1e-10,
/// refined adaptively from 2400 equal panels.
/// Throws std::invalid_argument when degree(P) > kMaxPayoffDegree.
double quadrature_price(const RealPolynomial& payoff, int order);

}  // namespace chaosrates
