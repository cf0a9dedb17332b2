#include "chaosrates/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace chaosrates {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;  // 1/sqrt(2 pi)

// a^{k} rho(a), vanishing at infinite endpoints and wherever rho underflows.
double boundary_term(int power, const ExtendedReal& x) {
  if (!x.is_finite()) return 0.0;
  const double rho = normal_pdf(x.value());
  if (rho == 0.0) return 0.0;
  return std::pow(x.value(), power) * rho;
}

// N(b) - N(a) without cancellation when both limits sit in the same tail.
double normal_mass(const ExtendedReal& a, const ExtendedReal& b) {
  const double lo = a.value();
  const double hi = b.value();
  if (lo >= 0.0) return normal_tail(lo) - normal_tail(hi);
  if (hi <= 0.0) return normal_cdf(hi) - normal_cdf(lo);
  return 1.0 - normal_cdf(lo) - normal_tail(hi);
}

}  // namespace

ExtendedReal::ExtendedReal(double value) {
  if (std::isnan(value)) throw std::invalid_argument("ExtendedReal: NaN");
  if (std::isinf(value)) {
    kind_ = value > 0 ? Kind::kPlusInfinity : Kind::kMinusInfinity;
  } else {
    value_ = value;
  }
}

double ExtendedReal::value() const {
  switch (kind_) {
    case Kind::kMinusInfinity:
      return -std::numeric_limits<double>::infinity();
    case Kind::kPlusInfinity:
      return std::numeric_limits<double>::infinity();
    case Kind::kFinite:
      break;
  }
  return value_;
}

RealPolynomial hermite(int n) {
  if (n < 0) throw std::invalid_argument("hermite: negative order");
  // Coefficient of x^{n-2k} is (-1)^k n! / (k! (n-2k)! 2^k); successive ratios
  // keep every intermediate an integer, exact in double while below 2^53.
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  double term = 1.0;
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      term *= -static_cast<double>(n - 2 * k + 2) * static_cast<double>(n - 2 * k + 1);
      term /= 2.0 * k;
    }
    c[static_cast<std::size_t>(n - 2 * k)] = term;
  }
  return RealPolynomial(std::move(c));
}

double hermite_value(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite_value: negative order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = x;
  for (int k = 1; k < n; ++k) {
    const double next = x * curr - k * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<std::pair<int, double>> hermite_product_expansion(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("hermite_product_expansion: negative order");
  std::vector<std::pair<int, double>> out;
  const int kmax = std::min(n, m);
  out.reserve(static_cast<std::size_t>(kmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    const double coeff = static_cast<double>(binomial(m, k)) *
                         static_cast<double>(binomial(n, k)) * factorial(k);
    out.emplace_back(m + n - 2 * k, coeff);
  }
  return out;
}

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

std::vector<double> gaussian_partial_moments(int max_k, ExtendedReal a, ExtendedReal b) {
  if (max_k < 0) throw std::invalid_argument("gaussian_partial_moment: negative order");
  if (b < a) throw std::invalid_argument("gaussian_partial_moment: lower limit exceeds upper");
  std::vector<double> m(static_cast<std::size_t>(max_k) + 1, 0.0);
  m[0] = normal_mass(a, b);
  if (max_k >= 1) m[1] = boundary_term(0, a) - boundary_term(0, b);
  for (int k = 2; k <= max_k; ++k) {
    m[static_cast<std::size_t>(k)] = (k - 1) * m[static_cast<std::size_t>(k - 2)] +
                                     boundary_term(k - 1, a) - boundary_term(k - 1, b);
  }
  return m;
}

double gaussian_partial_moment(int k, ExtendedReal a, ExtendedReal b) {
  return gaussian_partial_moments(k, a, b).back();
}

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact because result * num is divisible by i.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace chaosrates
