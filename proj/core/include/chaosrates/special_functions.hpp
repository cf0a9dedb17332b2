#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chaosrates/polynomial.hpp"

namespace chaosrates {

/// A real number or one of the two infinities. Infinite integration limits
/// are carried as distinct states rather than as large finite sentinels.
class ExtendedReal {
 public:
  enum class Kind { kMinusInfinity, kFinite, kPlusInfinity };

  /// Accepts any non-NaN double; IEEE infinities map to the infinite states.
  ExtendedReal(double value);  // NOLINT(google-explicit-constructor)

  static ExtendedReal minus_infinity() { return ExtendedReal(Kind::kMinusInfinity); }
  static ExtendedReal plus_infinity() { return ExtendedReal(Kind::kPlusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }

  /// The finite value, or the matching IEEE infinity.
  double value() const;

  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    return a.value() < b.value();
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return a.value() <= b.value();
  }
  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kFinite || a.value_ == b.value_);
  }

 private:
  explicit ExtendedReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

/// Probabilists' Hermite polynomial He_n: H_0 = 1, H_1 = x, H_2 = x^2 - 1,
/// H_{n+1} = x H_n - n H_{n-1}. Monic, orthogonal under the standard normal
/// density with E[H_n(Z) H_m(Z)] = n! delta_nm.
///
/// Note this is NOT the physicists' H_n (H_2 = 4x^2 - 2) used by many tables.
RealPolynomial hermite(int n);

/// Evaluates He_n(x) by the three-term recurrence.
double hermite_value(int n, double x);

/// Linearisation H_n H_m = sum_k C(m,k) C(n,k) k! H_{m+n-2k}, k = 0..min(m,n),
/// returned as (order, coefficient) pairs with order descending.
std::vector<std::pair<int, double>> hermite_product_expansion(int n, int m);

double normal_pdf(double x);
double normal_cdf(double x);

/// Upper tail 1 - N(x), accurate for large positive x.
double normal_tail(double x);

/// M_k(a, b) = integral over [a, b] of z^k rho(z) dz, rho the standard normal
/// density. Uses the forward recurrence
///   M_0 = N(b) - N(a),  M_1 = rho(a) - rho(b),
///   M_k = (k-1) M_{k-2} + a^{k-1} rho(a) - b^{k-1} rho(b),
/// with boundary terms at infinite endpoints equal to zero.
/// Throws std::invalid_argument when a > b or k < 0.
double gaussian_partial_moment(int k, ExtendedReal a, ExtendedReal b);

/// All moments M_0..M_max_k over [a, b] in one pass.
std::vector<double> gaussian_partial_moments(int max_k, ExtendedReal a, ExtendedReal b);

/// n! as a double; exact for n <= 22.
double factorial(int n);

/// Binomial coefficient C(n, k) as an exact integer. Throws on overflow.
std::uint64_t binomial(int n, int k);

}  // namespace chaosrates
