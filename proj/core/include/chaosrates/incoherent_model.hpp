#pragma once

#include <cstddef>
#include <vector>

#include "chaosrates/structure_function.hpp"

namespace chaosrates {

struct CoherentTerm {
  double weight = 1.0;
  int order = 1;
  StructureFunction sf;
};

/// Weighted superposition X_inf = sum_i c_i X_inf^{(n_i)}(phi_i).
///
/// Two shapes are supported: all terms of one common order, or exactly one
/// first-order term plus one term of order n >= 2. Other mixtures need a
/// cross-order isometry that is not implemented and are rejected.
class IncoherentModel {
 public:
  enum class Shape { kEqualOrder, kFirstPlusHigher };

  explicit IncoherentModel(std::vector<CoherentTerm> terms);

  const std::vector<CoherentTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Shape shape() const { return shape_; }

  /// Common order, or the higher order for the mixed shape.
  int order() const { return order_; }

  /// Index of the first-order term in the mixed shape.
  std::size_t first_order_index() const { return first_index_; }
  std::size_t higher_order_index() const { return 1 - first_index_; }

 private:
  std::vector<CoherentTerm> terms_;
  Shape shape_ = Shape::kEqualOrder;
  int order_ = 1;
  std::size_t first_index_ = 0;
};

/// Joint Gaussian state of the drivers R_t(phi_i) with Q_i(t) and the
/// residual Gram matrix G_ij = int_t^inf phi_i phi_j.
struct MultiGaussianState {
  double t = 0.0;
  std::vector<double> R;
  std::vector<double> Q;
  /// Row-major, size() x size().
  std::vector<double> residual_gram;

  std::size_t size() const { return R.size(); }
  double residual(std::size_t i, std::size_t j) const { return residual_gram[i * R.size() + j]; }

  /// Builds the state at t for the given driver values and checks that the
  /// residual Gram matrix is positive semidefinite.
  static MultiGaussianState make(const IncoherentModel& model, double t, std::vector<double> R);
};

/// Covariance of the drivers at t, int_0^t phi_i phi_j, row-major.
std::vector<double> driver_covariance(const IncoherentModel& model, double t);

/// E_t[X^{(m)}(phi_i) X^{(m)}(phi_j)] evaluated at a horizon where the
/// remaining overlap is `overlap`: sum_{l=0}^m overlap^l / l! X^{(m-l)}_i X^{(m-l)}_j.
double conditional_cross_moment(int m, double overlap, double R_i, double Q_i, double R_j,
                                double Q_j);

/// Equal-order kernel
///   pi_t = sum_{i,j} c_i c_j sum_{k=1}^n G_ij^k / k! X^{(n-k)}(phi_i) X^{(n-k)}(phi_j).
/// Throws std::invalid_argument for the mixed shape.
double incoherent_kernel(const IncoherentModel& model, const MultiGaussianState& state);

enum class MixedNormalisation {
  /// sum_k (1 - Q_t(phi_2))^k / k! [X^{(n-k)}(phi_2)]^2, the conditional variance.
  kConditionalVariance,
  /// sum_k [X^{(n-k)}(phi_2)]^2 / (k!)^2 as commonly displayed; kept for comparison.
  kDisplayed,
};

/// Kernel of c_1 X^{(1)}(phi_1) + c_2 X^{(n)}(phi_2):
///   c_1^2 (1 - Q_1) + c_2^2 sum_k w_k [X^{(n-k)}(phi_2)]^2 + 2 c_1 c_2 X^{(n-1)}(phi_2) G_12.
/// Throws std::invalid_argument unless the model has the mixed shape.
double mixed_order_kernel(const IncoherentModel& model, const MultiGaussianState& state,
                          MixedNormalisation normalisation = MixedNormalisation::kConditionalVariance);

/// Dispatches on shape; the mixed shape uses the conditional-variance weights.
double kernel(const IncoherentModel& model, const MultiGaussianState& state);

/// P_tT = E_t[pi_T] / pi_t. Throws std::invalid_argument when T < t.
double incoherent_bond_price(const IncoherentModel& model, const MultiGaussianState& state,
                             double T);

/// P_0T.
double incoherent_initial_bond_price(const IncoherentModel& model, double T);

}  // namespace chaosrates
