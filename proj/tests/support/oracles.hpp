#pragma once

// Reference implementations used only by the tests. Nothing here calls the
// pricing engine; every formula is written out independently.

#include <utility>
#include <vector>

namespace oracles {

/// Nodes and weights of the n-point Gauss rule for the standard normal
/// weight (Golub-Welsch); weights sum to one. Exact for degree <= 2n - 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_hermite(int n);

/// E[f(Z)] by the rule above.
template <typename F>
double gh_expect(const GaussRule& rule, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

/// Probabilists' Hermite polynomial by the explicit sum
/// n! sum_k (-1)^k x^{n-2k} / (k! (n-2k)! 2^k).
double hermite_explicit(int n, double x);

/// Var_t of He_n(R_inf)/n! given R_t = r and Q_t = q with Q_inf = 1, by
/// Gauss-Hermite quadrature of the conditional law.
double conditional_variance_gh(int n, double r, double q);

double norm_cdf(double x);
double norm_pdf(double x);

// Option formulas for second-order models, coefficients and case formulas. The *_uncorrected
// variants keep known errors so tests can show they disagree with the engine.
namespace n2 {
struct Coeffs {
  double A, B;
};
Coeffs call_coeffs(double qt, double qT, double K);
double p0(double q);  // 1 - q^2
double case_i(double qt, double qT);
double case_ii(double qt, double qT, double K);
double case_iii();
/// With a stray trailing factor Q_t on 4 A z_1 rho(z_1).
double case_iv_uncorrected(double qt, double qT, double K);
/// Same with the factor Q_t removed.
double case_iv_corrected(double qt, double qT, double K);
/// Hedge ratio without the correction.
double delta_uncorrected(double qt, double qT, double K);

Coeffs swaption_coeffs(double qt, const std::vector<double>& q_pay, double K);
double swaption_value(double qt, const std::vector<double>& q_pay, double K);  // P_0t - P_0Tn - K sum P
double swaption_case_i();
double swaption_case_ii(double qt, const std::vector<double>& q_pay, double K);
double swaption_case_iii(double qt, const std::vector<double>& q_pay, double K);
/// Case (iii) written in the payoff coefficients alone, 2 E[(A z^2 + B)^+]
/// with A < 0 < B, for coefficient pairs no admissible curve produces.
double swaption_case_iii(const Coeffs& c);
double swaption_case_iv(double qt, const std::vector<double>& q_pay, double K);
}  // namespace n2

// Third-order call: 6 E[(A z^4 + B z^2 + C)^+].
namespace n3 {
struct Coeffs {
  double A, B, C;
};
Coeffs call_coeffs(double qt, double qT, double K);
double case_i(double qt, double qT);
double case_ii_uncorrected(const Coeffs& c);
double case_ii_corrected(const Coeffs& c);
double case_iii(const Coeffs& c);
double case_iv_uncorrected();
double case_iv_corrected(const Coeffs& c);
double case_v_uncorrected(const Coeffs& c);
double case_v_corrected();
double case_vi(const Coeffs& c);
double case_vii(const Coeffs& c);
}  // namespace n3

/// Two-term second-order incoherent kernel, uncorrected (diagonal terms
/// carry 2 c_i^2).
double example1_uncorrected(double c1, double c2, double R1, double Q1, double R2, double Q2,
                            double overlap);
/// Same with diagonal coefficient c_i^2.
double example1_corrected(double c1, double c2, double R1, double Q1, double R2, double Q2,
                          double overlap);

}  // namespace oracles
