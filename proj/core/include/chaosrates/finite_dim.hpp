#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chaosrates/structure_function.hpp"

namespace chaosrates {

/// Discount bond prices by maturity, maturities strictly increasing.
struct DiscountCurve {
  std::vector<double> maturities;
  std::vector<double> prices;
};

/// Dirac-atom structure function: weight p_i at each market maturity T_i
/// and the remainder p_{N+1} at an auxiliary horizon T_{N+1} > T_N.
class AtomGrid {
 public:
  /// weights has N + 1 entries summing to 1 within 1e-12. A missing horizon
  /// defaults to T_N + 1.
  AtomGrid(std::vector<double> maturities, std::optional<double> horizon,
           std::vector<double> weights);

  const std::vector<double>& maturities() const { return maturities_; }
  double horizon() const { return horizon_; }
  const std::vector<double>& weights() const { return weights_; }

  /// T_1, ..., T_N, T_{N+1}.
  std::vector<double> atom_times() const;

  /// Q_t = sum of weights on atoms at or before t.
  double q_at(double t) const;

  StructureFunction structure() const;

 private:
  std::vector<double> maturities_;
  double horizon_;
  std::vector<double> weights_;
};

/// Step levels of P_0t: 1 before T_1, then 1 - (p_1 + ... + p_i)^n on
/// [T_i, T_{i+1}), with the last entry the level after T_{N+1}. Generic in
/// the scalar so rational arithmetic can check it exactly.
template <typename Scalar>
std::vector<Scalar> step_curve_levels(const std::vector<Scalar>& weights, int order) {
  if (order < 1) throw std::invalid_argument("step_curve_levels: order must be >= 1");
  std::vector<Scalar> levels;
  levels.reserve(weights.size() + 1);
  levels.push_back(Scalar(1));
  Scalar cumulative(0);
  for (const auto& w : weights) {
    cumulative += w;
    Scalar power(1);
    for (int k = 0; k < order; ++k) power *= cumulative;
    levels.push_back(Scalar(1) - power);
  }
  return levels;
}

/// P_0t at every atom time T_1..T_{N+1} (right-continuous values).
DiscountCurve initial_curve(const AtomGrid& grid, int order);

/// P_0t for arbitrary t >= 0.
double initial_price(const AtomGrid& grid, int order, double t);

class CalibrationError : public std::invalid_argument {
 public:
  CalibrationError(const std::string& what, double maturity)
      : std::invalid_argument(what), maturity_(maturity) {}
  double maturity() const { return maturity_; }

 private:
  double maturity_;
};

/// Inverts the step curve: s_i = (1 - P_0T_i)^{1/n}, p_i = s_i - s_{i-1},
/// p_{N+1} = 1 - s_N. Throws CalibrationError naming the first maturity at
/// which prices fail to lie in (0, 1) and decrease strictly.
AtomGrid calibrate_weights(const DiscountCurve& market, int order,
                           std::optional<double> horizon = std::nullopt);

/// One simulated path sampled at t = 0 and at each atom time T_i <= T.
struct SimplePath {
  std::vector<double> times;
  std::vector<double> R;
  std::vector<double> Q;
  std::vector<double> pi;
  /// P_{t,T} for the simulated bond maturity T; equals 1 from T onwards.
  std::vector<double> P;
};

/// Paths of the Gaussian driver, kernel and bond price. R is a random walk
/// with independent N(0, p_i) increments at T_i; path j draws from stream
/// (seed, j). Requires 0 < T <= T_N and count > 0.
std::vector<SimplePath> simulate_paths(const AtomGrid& grid, int order, double bond_maturity,
                                       std::size_t count, std::uint64_t seed);

}  // namespace chaosrates
