#include "chaosrates/polynomial_pricer.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace chaosrates {

namespace {

constexpr double kRootMergeTolerance = 1e-9;
constexpr double kResidualTolerance = 1e-9;
constexpr double kImaginaryTolerance = 1e-6;
constexpr double kDeltaBump = 1e-4;

// Real roots of a x^2 + b x + c with a != 0, cancellation-free.
std::vector<double> quadratic_roots(double a, double b, double c) {
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> r;
  if (q != 0.0) {
    r = {q / a, c / q};
  } else {
    r = {0.0};
  }
  return r;
}

double newton_polish(const RealPolynomial& p, const RealPolynomial& dp, double x) {
  double best = x;
  double best_residual = std::abs(p(x));
  for (int it = 0; it < 60 && best_residual > 0.0; ++it) {
    const double d = dp(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = x - p(x) / d;
    if (!std::isfinite(next)) break;
    const double r = std::abs(p(next));
    if (r < best_residual) {
      best = next;
      best_residual = r;
    }
    if (next == x) break;
    x = next;
  }
  return best;
}

std::vector<double> candidate_roots(const RealPolynomial& p) {
  const auto& c = p.coeffs();
  const int deg = p.degree();
  if (deg == 1) return {-c[0] / c[1]};
  if (deg == 2) return quadratic_roots(c[2], c[1], c[0]);
  if (deg == 4 && p.is_even()) {
    std::vector<double> out;
    for (double y : quadratic_roots(c[4], c[2], c[0])) {
      if (y > 0.0) {
        out.push_back(-std::sqrt(y));
        out.push_back(std::sqrt(y));
      } else if (y == 0.0) {
        out.push_back(0.0);
      }
    }
    return out;
  }

  // Zero roots are split off so the companion matrix stays nonsingular.
  int zeros = 0;
  while (c[static_cast<std::size_t>(zeros)] == 0.0) ++zeros;
  const int m = deg - zeros;
  std::vector<double> out;
  if (zeros > 0) out.push_back(0.0);
  if (m == 0) return out;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  const double lead = c.back();
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -c[static_cast<std::size_t>(zeros + i)] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (const auto& z : solver.eigenvalues()) {
    if (std::abs(z.imag()) <= kImaginaryTolerance * (1.0 + std::abs(z.real()))) {
      out.push_back(z.real());
    }
  }
  return out;
}

double sample_sign(const RealPolynomial& p, double x) { return p(x); }

// Level overloads take Q values directly; they must be ordered in [0, 1].
void check_levels(double q_option, double q_bond, double strike) {
  if (!(q_option >= 0.0 && q_option <= q_bond && q_bond <= 1.0)) {
    throw std::invalid_argument("call: require 0 <= Q_t <= Q_T <= 1");
  }
  if (!(strike >= 0.0) || !std::isfinite(strike)) {
    throw std::invalid_argument("call: strike must be finite and >= 0");
  }
}

}  // namespace

void OptionSpec::validate() const {
  if (!(option_maturity > 0.0) || !std::isfinite(option_maturity)) {
    throw std::invalid_argument("option spec: option maturity must be > 0");
  }
  if (!(bond_maturity >= option_maturity) || !std::isfinite(bond_maturity)) {
    throw std::invalid_argument("option spec: bond maturity must not precede option maturity");
  }
  if (!(strike > 0.0) || !std::isfinite(strike)) {
    throw std::invalid_argument("option spec: strike must be > 0");
  }
}

void SwaptionSpec::validate() const {
  if (!(option_maturity > 0.0) || !std::isfinite(option_maturity)) {
    throw std::invalid_argument("swaption spec: option maturity must be > 0");
  }
  if (payment_dates.empty()) throw std::invalid_argument("swaption spec: no payment dates");
  double prev = option_maturity;
  for (double d : payment_dates) {
    if (!(d > prev) || !std::isfinite(d)) {
      throw std::invalid_argument("swaption spec: payment dates must increase strictly after t");
    }
    prev = d;
  }
  if (!(strike >= 0.0) || !std::isfinite(strike)) {
    throw std::invalid_argument("swaption spec: strike must be >= 0");
  }
}

std::vector<double> real_roots(const RealPolynomial& p) {
  if (p.degree() <= 0) return {};
  const RealPolynomial dp = p.derivative();
  std::vector<double> roots;
  for (double x : candidate_roots(p)) {
    const double polished = newton_polish(p, dp, x);
    if (std::abs(p(polished)) <= kResidualTolerance * p.magnitude_at(polished)) {
      roots.push_back(polished);
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (!merged.empty()) {
      const double scale = std::max({1.0, std::abs(r), std::abs(merged.back())});
      if (r - merged.back() <= kRootMergeTolerance * scale) continue;
    }
    merged.push_back(r);
  }
  return merged;
}

PositivePartResult expected_positive_part(const RealPolynomial& p) {
  if (p.degree() > kMaxPayoffDegree) {
    throw std::invalid_argument("expected_positive_part: degree " + std::to_string(p.degree()) +
                                " exceeds " + std::to_string(kMaxPayoffDegree));
  }
  PositivePartResult out;
  out.payoff_polynomial = p;
  if (p.is_zero()) return out;

  out.roots = real_roots(p);
  const auto& r = out.roots;

  // Pieces between consecutive roots; the sign is constant on each.
  std::vector<ExtendedReal> edges;
  edges.reserve(r.size() + 2);
  edges.push_back(ExtendedReal::minus_infinity());
  for (double x : r) edges.emplace_back(x);
  edges.push_back(ExtendedReal::plus_infinity());

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double probe;
    if (r.empty()) {
      probe = 0.0;
    } else if (i == 0) {
      probe = r.front() - 1.0;
    } else if (i + 1 == edges.size() - 1) {
      probe = r.back() + 1.0;
    } else {
      probe = 0.5 * (r[i - 1] + r[i]);
    }
    if (!(sample_sign(p, probe) > 0.0)) continue;
    if (!out.positive_intervals.empty() && out.positive_intervals.back().hi == edges[i]) {
      out.positive_intervals.back().hi = edges[i + 1];
    } else {
      out.positive_intervals.push_back({edges[i], edges[i + 1]});
    }
  }

  const auto& c = p.coeffs();
  for (const auto& iv : out.positive_intervals) {
    const auto moments = gaussian_partial_moments(p.degree(), iv.lo, iv.hi);
    for (std::size_t k = 0; k < c.size(); ++k) out.value += c[k] * moments[k];
  }
  return out;
}

RealPolynomial call_payoff_polynomial(int order, double q_option, double q_bond, double strike) {
  check_levels(q_option, q_bond, strike);
  if (!(q_option > 0.0)) {
    throw std::domain_error("call payoff: Q_t = 0 leaves the normalised state undefined");
  }
  const RealPolynomial in_r = kernel_numerator_polynomial(order, q_option, q_bond) -
                              strike * kernel_numerator_polynomial(order, q_option, q_option);
  return in_r.rescaled(std::sqrt(q_option));
}

RealPolynomial call_payoff_polynomial(const CoherentModel& model, const OptionSpec& spec) {
  spec.validate();
  const auto& sf = model.structure();
  return call_payoff_polynomial(model.order(), sf.q_at(spec.option_maturity),
                                sf.q_at(spec.bond_maturity), spec.strike);
}

double price_bond_call(int order, double q_option, double q_bond, double strike) {
  check_levels(q_option, q_bond, strike);
  if (q_option == 0.0) {
    const double p0T = 1.0 - std::pow(q_bond, order);
    return std::max(p0T - strike, 0.0);
  }
  return factorial(order) *
         expected_positive_part(call_payoff_polynomial(order, q_option, q_bond, strike)).value;
}

double price_bond_call(const CoherentModel& model, const OptionSpec& spec) {
  spec.validate();
  const auto& sf = model.structure();
  return price_bond_call(model.order(), sf.q_at(spec.option_maturity),
                         sf.q_at(spec.bond_maturity), spec.strike);
}

std::vector<double> price_bond_call_strikes(const CoherentModel& model, double option_maturity,
                                            double bond_maturity,
                                            std::span<const double> strikes) {
  std::vector<double> out(strikes.size());
  detail::parallel_for(strikes.size(), [&](std::size_t i) {
    out[i] = price_bond_call(model, OptionSpec{option_maturity, bond_maturity, strikes[i]});
  });
  return out;
}

double call_delta(int order, double q_option, double q_bond, double strike) {
  check_levels(q_option, q_bond, strike);
  if (q_option > 0.0 && order == 2) {
    const RealPolynomial poly = call_payoff_polynomial(order, q_option, q_bond, strike);
    const double A = poly.coeff(2);
    const double B = poly.coeff(0);
    if (A > 0.0) return 1.0;
    if (A < 0.0 && B <= 0.0) return 0.0;
    if (A < 0.0 && B > 0.0) {
      const double z1 = -std::sqrt(-B / A);
      return 1.0 - 2.0 * normal_cdf(z1) + 2.0 * q_option * z1 * normal_pdf(z1) / q_bond;
    }
  }

  // Central difference in P_0T, moving Q_T only.
  const double p0T = 1.0 - std::pow(q_bond, order);
  const double h = kDeltaBump * p0T;
  const double up = p0T + h;
  const double down = p0T - h;
  if (!(h > 0.0) || !(up < 1.0) || !(down > 0.0)) {
    throw std::domain_error("call_delta: degenerate hedge, bond price bump leaves (0, 1)");
  }
  const double q_up = std::pow(1.0 - up, 1.0 / order);
  const double q_down = std::pow(1.0 - down, 1.0 / order);
  if (q_up < q_option) {
    throw std::domain_error("call_delta: degenerate hedge, bump moves Q_T below Q_t");
  }
  return (price_bond_call(order, q_option, q_up, strike) -
          price_bond_call(order, q_option, q_down, strike)) /
         (up - down);
}

double call_delta(const CoherentModel& model, const OptionSpec& spec) {
  spec.validate();
  const auto& sf = model.structure();
  return call_delta(model.order(), sf.q_at(spec.option_maturity), sf.q_at(spec.bond_maturity),
                    spec.strike);
}

RealPolynomial swaption_payoff_polynomial(int order, double q_option,
                                          std::span<const double> q_payments, double strike) {
  if (!(q_option > 0.0)) {
    throw std::domain_error("swaption payoff: Q_t = 0 leaves the normalised state undefined");
  }
  if (q_payments.empty()) throw std::invalid_argument("swaption payoff: no payment dates");
  RealPolynomial in_r = kernel_numerator_polynomial(order, q_option, q_option);
  in_r -= kernel_numerator_polynomial(order, q_option, q_payments.back());
  for (double q : q_payments) in_r -= strike * kernel_numerator_polynomial(order, q_option, q);
  return in_r.rescaled(std::sqrt(q_option));
}

RealPolynomial swaption_payoff_polynomial(const CoherentModel& model, const SwaptionSpec& spec) {
  spec.validate();
  const auto& sf = model.structure();
  std::vector<double> q;
  q.reserve(spec.payment_dates.size());
  for (double d : spec.payment_dates) q.push_back(sf.q_at(d));
  return swaption_payoff_polynomial(model.order(), sf.q_at(spec.option_maturity), q,
                                    spec.strike);
}

double price_swaption(int order, double q_option, std::span<const double> q_payments,
                      double strike) {
  if (q_payments.empty()) throw std::invalid_argument("swaption: no payment dates");
  if (q_option == 0.0) {
    auto p0 = [order](double q) { return 1.0 - std::pow(q, order); };
    double value = 1.0 - p0(q_payments.back());
    for (double q : q_payments) value -= strike * p0(q);
    return std::max(value, 0.0);
  }
  return factorial(order) *
         expected_positive_part(swaption_payoff_polynomial(order, q_option, q_payments, strike))
             .value;
}

double price_swaption(const CoherentModel& model, const SwaptionSpec& spec) {
  spec.validate();
  const auto& sf = model.structure();
  std::vector<double> q;
  q.reserve(spec.payment_dates.size());
  for (double d : spec.payment_dates) q.push_back(sf.q_at(d));
  return price_swaption(model.order(), sf.q_at(spec.option_maturity), q, spec.strike);
}

}  // namespace chaosrates
