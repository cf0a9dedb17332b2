#pragma once

#include <span>
#include <vector>

#include "chaosrates/coherent_model.hpp"
#include "chaosrates/polynomial.hpp"
#include "chaosrates/special_functions.hpp"

namespace chaosrates {

/// European call on a discount bond: exercise at option_maturity t on a
/// bond maturing at bond_maturity T >= t, strike K.
struct OptionSpec {
  double option_maturity = 0.0;
  double bond_maturity = 0.0;
  double strike = 0.0;

  /// Requires 0 < t <= T and K > 0.
  void validate() const;
};

/// Payer swaption paying (1 - P_{t,T_n} - K sum_i P_{t,T_i})^+ at t.
struct SwaptionSpec {
  double option_maturity = 0.0;
  std::vector<double> payment_dates;
  double strike = 0.0;

  /// Requires 0 < t < T_1 < ... < T_n and K >= 0.
  void validate() const;
};

struct Interval {
  ExtendedReal lo;
  ExtendedReal hi;
};

struct PositivePartResult {
  double value = 0.0;
  RealPolynomial payoff_polynomial;
  /// Maximal disjoint intervals, sorted, on which the polynomial is positive.
  std::vector<Interval> positive_intervals;
  /// Distinct real roots, sorted ascending.
  std::vector<double> roots;
};

/// Highest degree accepted by expected_positive_part.
inline constexpr int kMaxPayoffDegree = 30;

/// Distinct real roots of p, ascending. Degree <= 2 and even quartics use
/// closed forms; otherwise eigenvalues of the companion matrix, polished by
/// Newton iteration and merged at relative tolerance 1e-9.
std::vector<double> real_roots(const RealPolynomial& p);

/// E[(p(Z))^+] for Z standard normal: sum over the maximal intervals where p
/// is positive of sum_k c_k M_k(lo, hi). The zero polynomial gives 0.
/// Throws std::invalid_argument when degree(p) > kMaxPayoffDegree.
PositivePartResult expected_positive_part(const RealPolynomial& p);

/// Polynomial P in Z = R_t / sqrt(Q_t) with C_0 = n! E[(P(Z))^+], i.e. the
/// expansion of pi_t (P_tT - K). For n = 2 its coefficients are
/// A = Q_t[(1 - Q_T) - K(1 - Q_t)] on z^2 and
/// B = [(1 - Q_T^2) - K(1 - Q_t^2)]/2 - Q_t[(1 - Q_T) - K(1 - Q_t)].
/// Throws std::domain_error when Q_t = 0 (Z_t undefined).
RealPolynomial call_payoff_polynomial(const CoherentModel& model, const OptionSpec& spec);
RealPolynomial call_payoff_polynomial(int order, double q_option, double q_bond, double strike);

/// Time-0 call price normalised by pi_0 = 1/n!. When Q_t = 0 the state at
/// expiry is deterministic and the price is max(P_0T - K, 0).
double price_bond_call(const CoherentModel& model, const OptionSpec& spec);
double price_bond_call(int order, double q_option, double q_bond, double strike);

/// Call prices over a strike grid, order preserved.
std::vector<double> price_bond_call_strikes(const CoherentModel& model, double option_maturity,
                                            double bond_maturity, std::span<const double> strikes);

/// dC_0 / dP_0T with Q_t held fixed. For n = 2 in the two-root case
/// (A < 0 < B) this is 1 - 2N(z_1) + 2 Q_t z_1 rho(z_1) / Q_T with
/// z_1 = -sqrt(-B/A); other configurations use a central difference with
/// relative bump 1e-4 on P_0T. Throws std::domain_error when the bump
/// would leave the admissible range of Q_T.
double call_delta(const CoherentModel& model, const OptionSpec& spec);
double call_delta(int order, double q_option, double q_bond, double strike);

/// Polynomial in Z for pi_t (1 - P_{tT_n} - K sum_i P_{tT_i}).
RealPolynomial swaption_payoff_polynomial(const CoherentModel& model, const SwaptionSpec& spec);
RealPolynomial swaption_payoff_polynomial(int order, double q_option,
                                          std::span<const double> q_payments, double strike);

double price_swaption(const CoherentModel& model, const SwaptionSpec& spec);
double price_swaption(int order, double q_option, std::span<const double> q_payments,
                      double strike);

}  // namespace chaosrates
