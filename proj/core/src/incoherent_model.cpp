#include "chaosrates/incoherent_model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaosrates/coherent_model.hpp"
#include "chaosrates/special_functions.hpp"

namespace chaosrates {

namespace {

constexpr double kGramTolerance = 1e-12;

void require_mixed(const IncoherentModel& model) {
  if (model.shape() != IncoherentModel::Shape::kFirstPlusHigher) {
    throw std::invalid_argument("mixed_order_kernel: model is not a first-order plus nth-order pair");
  }
}

void require_equal(const IncoherentModel& model) {
  if (model.shape() != IncoherentModel::Shape::kEqualOrder) {
    throw std::invalid_argument("incoherent_kernel: terms must share one chaos order");
  }
}

void check_state(const IncoherentModel& model, const MultiGaussianState& state) {
  const std::size_t m = model.size();
  if (state.R.size() != m || state.Q.size() != m || state.residual_gram.size() != m * m) {
    throw std::invalid_argument("MultiGaussianState: dimensions do not match the model");
  }
}

// Weight on [X^{(n-k)}(phi_2)]^2 in the mixed kernel, given remaining mass g.
double mixed_weight(int k, double g, MixedNormalisation normalisation) {
  if (normalisation == MixedNormalisation::kDisplayed) {
    const double f = factorial(k);
    return 1.0 / (f * f);
  }
  return std::pow(g, k) / factorial(k);
}

}  // namespace

IncoherentModel::IncoherentModel(std::vector<CoherentTerm> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("incoherent model: at least one term required");
  bool any_weight = false;
  for (const auto& term : terms_) {
    if (!std::isfinite(term.weight)) throw std::invalid_argument("incoherent model: weight not finite");
    if (term.order < 1 || term.order > kMaxChaosOrder) {
      throw std::invalid_argument("incoherent model: term order out of range");
    }
    any_weight = any_weight || term.weight != 0.0;
  }
  if (!any_weight) throw std::invalid_argument("incoherent model: weights are all zero");

  const bool equal = std::all_of(terms_.begin(), terms_.end(),
                                 [&](const CoherentTerm& t) { return t.order == terms_[0].order; });
  if (equal) {
    shape_ = Shape::kEqualOrder;
    order_ = terms_[0].order;
    return;
  }
  if (terms_.size() == 2 && (terms_[0].order == 1 || terms_[1].order == 1)) {
    shape_ = Shape::kFirstPlusHigher;
    first_index_ = terms_[0].order == 1 ? 0 : 1;
    order_ = terms_[1 - first_index_].order;
    return;
  }
  throw std::invalid_argument(
      "incoherent model: mixed orders are supported only as one first-order term plus one "
      "higher-order term");
}

MultiGaussianState MultiGaussianState::make(const IncoherentModel& model, double t,
                                            std::vector<double> R) {
  const std::size_t m = model.size();
  if (R.size() != m) throw std::invalid_argument("MultiGaussianState: one driver value per term");
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("MultiGaussianState: t must be >= 0");
  MultiGaussianState s;
  s.t = t;
  s.R = std::move(R);
  s.Q.resize(m);
  s.residual_gram.resize(m * m);
  const auto& terms = model.terms();
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(s.R[i])) throw std::invalid_argument("MultiGaussianState: R must be finite");
    s.Q[i] = terms[i].sf.q_at(t);
    for (std::size_t j = i; j < m; ++j) {
      const double g = overlap_integral(terms[i].sf, terms[j].sf, t, ExtendedReal::plus_infinity());
      s.residual_gram[i * m + j] = g;
      s.residual_gram[j * m + i] = g;
    }
  }

  Eigen::MatrixXd gram = Eigen::Map<const Eigen::MatrixXd>(s.residual_gram.data(),
                                                            static_cast<Eigen::Index>(m),
                                                            static_cast<Eigen::Index>(m));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, gram.cwiseAbs().maxCoeff());
  if (solver.eigenvalues().minCoeff() < -kGramTolerance * scale) {
    throw std::domain_error("MultiGaussianState: residual Gram matrix is not positive semidefinite");
  }
  return s;
}

std::vector<double> driver_covariance(const IncoherentModel& model, double t) {
  const std::size_t m = model.size();
  std::vector<double> cov(m * m);
  const auto& terms = model.terms();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double v = overlap_integral(terms[i].sf, terms[j].sf, 0.0, t);
      cov[i * m + j] = v;
      cov[j * m + i] = v;
    }
  }
  return cov;
}

double conditional_cross_moment(int m, double overlap, double R_i, double Q_i, double R_j,
                                double Q_j) {
  double sum = 0.0;
  double power = 1.0;
  for (int l = 0; l <= m; ++l) {
    sum += power / factorial(l) * chaos_martingale(m - l, R_i, Q_i) *
           chaos_martingale(m - l, R_j, Q_j);
    power *= overlap;
  }
  return sum;
}

double incoherent_kernel(const IncoherentModel& model, const MultiGaussianState& state) {
  require_equal(model);
  check_state(model, state);
  const int n = model.order();
  const auto& terms = model.terms();
  const std::size_t m = model.size();
  double pi = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double g = state.residual(i, j);
      double inner = 0.0;
      double power = 1.0;
      for (int k = 1; k <= n; ++k) {
        power *= g;
        inner += power / factorial(k) * chaos_martingale(n - k, state.R[i], state.Q[i]) *
                 chaos_martingale(n - k, state.R[j], state.Q[j]);
      }
      pi += terms[i].weight * terms[j].weight * inner;
    }
  }
  return pi;
}

double mixed_order_kernel(const IncoherentModel& model, const MultiGaussianState& state,
                          MixedNormalisation normalisation) {
  require_mixed(model);
  check_state(model, state);
  const std::size_t a = model.first_order_index();
  const std::size_t b = model.higher_order_index();
  const double c1 = model.terms()[a].weight;
  const double c2 = model.terms()[b].weight;
  const int n = model.order();
  const double R2 = state.R[b];
  const double Q2 = state.Q[b];

  double higher = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double x = chaos_martingale(n - k, R2, Q2);
    higher += mixed_weight(k, state.residual(b, b), normalisation) * x * x;
  }
  return c1 * c1 * state.residual(a, a) + c2 * c2 * higher +
         2.0 * c1 * c2 * chaos_martingale(n - 1, R2, Q2) * state.residual(a, b);
}

double kernel(const IncoherentModel& model, const MultiGaussianState& state) {
  if (model.shape() == IncoherentModel::Shape::kEqualOrder) return incoherent_kernel(model, state);
  return mixed_order_kernel(model, state);
}

double incoherent_bond_price(const IncoherentModel& model, const MultiGaussianState& state,
                             double T) {
  check_state(model, state);
  if (T < state.t) throw std::invalid_argument("incoherent_bond_price: maturity precedes valuation time");
  if (T == state.t) return 1.0;

  const auto& terms = model.terms();
  const std::size_t m = model.size();
  const int n = model.order();
  const double t = state.t;
  auto overlap_tT = [&](std::size_t i, std::size_t j) {
    return overlap_integral(terms[i].sf, terms[j].sf, t, T);
  };
  auto overlap_T = [&](std::size_t i, std::size_t j) {
    return overlap_integral(terms[i].sf, terms[j].sf, T, ExtendedReal::plus_infinity());
  };

  double expected = 0.0;
  if (model.shape() == IncoherentModel::Shape::kEqualOrder) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const double g = overlap_T(i, j);
        const double step = overlap_tT(i, j);
        double inner = 0.0;
        double power = 1.0;
        for (int k = 1; k <= n; ++k) {
          power *= g;
          inner += power / factorial(k) *
                   conditional_cross_moment(n - k, step, state.R[i], state.Q[i], state.R[j],
                                            state.Q[j]);
        }
        expected += terms[i].weight * terms[j].weight * inner;
      }
    }
  } else {
    const std::size_t a = model.first_order_index();
    const std::size_t b = model.higher_order_index();
    const double c1 = terms[a].weight;
    const double c2 = terms[b].weight;
    const double R2 = state.R[b];
    const double Q2 = state.Q[b];
    const double g22 = overlap_T(b, b);
    const double step22 = overlap_tT(b, b);
    double higher = 0.0;
    for (int k = 1; k <= n; ++k) {
      higher += mixed_weight(k, g22, MixedNormalisation::kConditionalVariance) *
                conditional_cross_moment(n - k, step22, R2, Q2, R2, Q2);
    }
    expected = c1 * c1 * overlap_T(a, a) + c2 * c2 * higher +
               2.0 * c1 * c2 * chaos_martingale(n - 1, R2, Q2) * overlap_T(a, b);
  }
  return expected / kernel(model, state);
}

double incoherent_initial_bond_price(const IncoherentModel& model, double T) {
  return incoherent_bond_price(model, MultiGaussianState::make(model, 0.0,
                                                               std::vector<double>(model.size(), 0.0)),
                               T);
}

}  // namespace chaosrates
