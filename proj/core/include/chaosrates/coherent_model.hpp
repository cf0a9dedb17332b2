#pragma once

#include "chaosrates/polynomial.hpp"
#include "chaosrates/structure_function.hpp"

namespace chaosrates {

/// Largest chaos order for which kernel coefficients stay exact integers
/// over factorials (central binomials up to C(40, 20) fit in 64 bits).
inline constexpr int kMaxChaosOrder = 20;

/// Single-factor nth-order coherent chaos model: X_infinity is the n-fold
/// iterated Wiener integral of phi(s_1) ... phi(s_n), and the pricing kernel
/// is its conditional variance.
class CoherentModel {
 public:
  CoherentModel(int order, StructureFunction sf);

  int order() const { return order_; }
  const StructureFunction& structure() const { return sf_; }

  /// pi_0 = 1 / n!.
  double initial_kernel() const;

  /// P_{0T} = 1 - Q_T^n.
  double initial_bond_price(double T) const;

  /// Gaussian state at time t with driver value R.
  GaussianState state(double t, double R) const { return GaussianState::at(sf_, t, R); }

 private:
  int order_;
  StructureFunction sf_;
};

/// Chaos martingale X_t^{(m)} = E_t[X_infinity^{(m)}]
///   = sum_k (-1)^k R^{m-2k} Q^k / (k! (m-2k)! 2^k),
/// with X^{(0)} = 1 and X^{(m)} = 0 for m < 0.
double chaos_martingale(int m, double R, double Q);
double chaos_martingale(const CoherentModel& model, int m, const GaussianState& state);

/// Same quantity through the Hermite route Q^{m/2} He_m(R / sqrt(Q)) / m!.
/// Requires Q > 0 for m >= 1.
double chaos_martingale_hermite(int m, double R, double Q);

/// X^{(m)} as a polynomial in R for fixed Q.
RealPolynomial chaos_martingale_polynomial(int m, double Q);

/// Coefficient c_k(q) = [2(n-k)]! (1 - q^k) / (k! [(n-k)!]^2) multiplying
/// X^{(2n-2k)} in the kernel numerator.
double kernel_coefficient(int n, int k, double q);

/// sum_k c_k(q_weight) X^{(2n-2k)}(R, q_state) as a polynomial in R.
/// With q_weight = Q_t this is the pricing kernel; with q_weight = Q_T it is
/// the martingale pi_t P_tT.
RealPolynomial kernel_numerator_polynomial(int n, double q_state, double q_weight);

/// Scalar version of kernel_numerator_polynomial evaluated at R.
double kernel_numerator(int n, double R, double q_state, double q_weight);

struct KernelValue {
  double pi = 0.0;
  /// Same kernel assembled as a degree 2n-2 polynomial in R_t.
  RealPolynomial as_polynomial;
};

/// pi_t^{(n)} = sum_{k=0}^n [2(n-k)]! (1 - Q_t^k) X_t^{(2n-2k)} / (k! [(n-k)!]^2).
KernelValue pricing_kernel(const CoherentModel& model, const GaussianState& state);

/// Kernel value only, without building the polynomial.
double kernel_value(int n, const GaussianState& state);

/// P_tT = E_t[pi_T] / pi_t as a ratio of polynomials in R_t; P_TT = 1.
/// Throws std::invalid_argument when T < state.t.
double bond_price(const CoherentModel& model, const GaussianState& state, double T);

/// Short rate r_t = (phi^2(t) / pi_t) sum_k [2(n-k)]! Q^{k-1} X^{(2n-2k)}
///                  / ((k-1)! [(n-k)!]^2), the k = 0 term being zero.
/// Atom families have phi^2 = 0 between atoms and return 0.
/// Throws std::domain_error when Q_t >= 1.
double short_rate(const CoherentModel& model, const GaussianState& state);

/// Risk premium lambda_t = -(phi(t) / pi_t) sum_k c_k(Q_t) X^{(2n-2k-1)}.
/// Atom families return 0. Throws std::domain_error when Q_t >= 1.
double risk_premium(const CoherentModel& model, const GaussianState& state);

}  // namespace chaosrates
