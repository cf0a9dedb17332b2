#include "chaosrates/finite_dim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "chaosrates/coherent_model.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace chaosrates {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

std::string at(double t) { return " at maturity " + std::to_string(t); }

}  // namespace

AtomGrid::AtomGrid(std::vector<double> maturities, std::optional<double> horizon,
                   std::vector<double> weights)
    : maturities_(std::move(maturities)), weights_(std::move(weights)) {
  if (maturities_.empty()) throw std::invalid_argument("atom grid: at least one maturity required");
  if (weights_.size() != maturities_.size() + 1) {
    throw std::invalid_argument("atom grid: need one weight per maturity plus the horizon weight");
  }
  for (std::size_t i = 0; i < maturities_.size(); ++i) {
    if (!(maturities_[i] > 0.0) || !std::isfinite(maturities_[i]) ||
        (i > 0 && !(maturities_[i] > maturities_[i - 1]))) {
      throw std::invalid_argument("atom grid: maturities must be positive and strictly increasing");
    }
  }
  horizon_ = horizon.value_or(maturities_.back() + 1.0);
  if (!(horizon_ > maturities_.back()) || !std::isfinite(horizon_)) {
    throw std::invalid_argument("atom grid: horizon must exceed the last maturity");
  }
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("atom grid: weights must lie in [0, 1]");
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument("atom grid: weights sum to " + std::to_string(total) +
                                ", expected 1");
  }
}

std::vector<double> AtomGrid::atom_times() const {
  std::vector<double> t = maturities_;
  t.push_back(horizon_);
  return t;
}

double AtomGrid::q_at(double t) const {
  double q = 0.0;
  for (std::size_t i = 0; i < maturities_.size() && maturities_[i] <= t; ++i) q += weights_[i];
  if (t >= horizon_) q += weights_.back();
  return std::min(q, 1.0);
}

StructureFunction AtomGrid::structure() const { return StructureFunction::atoms(atom_times(), weights_); }

DiscountCurve initial_curve(const AtomGrid& grid, int order) {
  const auto levels = step_curve_levels(grid.weights(), order);
  DiscountCurve curve;
  curve.maturities = grid.atom_times();
  curve.prices.assign(levels.begin() + 1, levels.end());
  return curve;
}

double initial_price(const AtomGrid& grid, int order, double t) {
  if (order < 1) throw std::invalid_argument("initial_price: order must be >= 1");
  return 1.0 - std::pow(grid.q_at(t), order);
}

AtomGrid calibrate_weights(const DiscountCurve& market, int order, std::optional<double> horizon) {
  if (order < 1) throw std::invalid_argument("calibrate_weights: order must be >= 1");
  const auto& T = market.maturities;
  const auto& P = market.prices;
  if (T.empty() || T.size() != P.size()) {
    throw std::invalid_argument("calibrate_weights: need matching, nonempty maturities and prices");
  }
  std::vector<double> weights;
  weights.reserve(T.size() + 1);
  double previous = 0.0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (i > 0 && !(T[i] > T[i - 1])) {
      throw CalibrationError("calibration: maturities not strictly increasing" + at(T[i]), T[i]);
    }
    if (!(P[i] > 0.0 && P[i] < 1.0)) {
      throw CalibrationError("calibration: price outside (0, 1)" + at(T[i]), T[i]);
    }
    if (i > 0 && !(P[i] < P[i - 1])) {
      throw CalibrationError("calibration: prices not strictly decreasing" + at(T[i]), T[i]);
    }
    const double s = std::pow(1.0 - P[i], 1.0 / order);
    if (!(s < 1.0)) throw CalibrationError("calibration: infeasible price" + at(T[i]), T[i]);
    weights.push_back(s - previous);
    previous = s;
  }
  weights.push_back(1.0 - previous);
  return AtomGrid(T, horizon, std::move(weights));
}

std::vector<SimplePath> simulate_paths(const AtomGrid& grid, int order, double bond_maturity,
                                       std::size_t count, std::uint64_t seed) {
  if (count == 0) throw std::invalid_argument("simulate_paths: path count must be positive");
  if (order < 1 || order > kMaxChaosOrder) {
    throw std::invalid_argument("simulate_paths: order out of range");
  }
  const auto& T = grid.maturities();
  if (!(bond_maturity > 0.0) || bond_maturity > T.back()) {
    throw std::invalid_argument("simulate_paths: bond maturity must lie in (0, T_N]");
  }

  std::vector<double> times{0.0};
  std::vector<double> q{0.0};
  std::vector<double> sd;
  for (std::size_t i = 0; i < T.size() && T[i] <= bond_maturity; ++i) {
    times.push_back(T[i]);
    q.push_back(q.back() + grid.weights()[i]);
    sd.push_back(std::sqrt(grid.weights()[i]));
  }
  const double q_bond = grid.q_at(bond_maturity);

  std::vector<SimplePath> paths(count);
  detail::parallel_for(count, [&](std::size_t j) {
    auto engine = detail::stream_engine(seed, j);
    std::normal_distribution<double> normal;
    SimplePath& path = paths[j];
    path.times = times;
    path.R.resize(times.size());
    path.Q = q;
    path.pi.resize(times.size());
    path.P.resize(times.size());
    double R = 0.0;
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (k > 0) R += sd[k - 1] * normal(engine);
      path.R[k] = R;
      const double denom = kernel_numerator(order, R, q[k], q[k]);
      path.pi[k] = denom;
      path.P[k] = q[k] == q_bond ? 1.0 : kernel_numerator(order, R, q[k], q_bond) / denom;
    }
  });
  return paths;
}

}  // namespace chaosrates
