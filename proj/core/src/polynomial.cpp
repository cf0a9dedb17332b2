#include "chaosrates/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace chaosrates {

RealPolynomial::RealPolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("RealPolynomial: non-finite coefficient");
  }
  trim();
}

RealPolynomial::RealPolynomial(std::initializer_list<double> coeffs)
    : RealPolynomial(std::vector<double>(coeffs)) {}

RealPolynomial RealPolynomial::constant(double value) { return RealPolynomial({value}); }

RealPolynomial RealPolynomial::monomial(int power, double coefficient) {
  if (power < 0) throw std::invalid_argument("RealPolynomial::monomial: negative power");
  std::vector<double> c(static_cast<std::size_t>(power) + 1, 0.0);
  c.back() = coefficient;
  return RealPolynomial(std::move(c));
}

double RealPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RealPolynomial::magnitude_at(double x) const {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::rescaled(double scale) const {
  std::vector<double> c = coeffs_;
  double power = 1.0;
  for (double& ck : c) {
    ck *= power;
    power *= scale;
  }
  return RealPolynomial(std::move(c));
}

bool RealPolynomial::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (coeffs_[k] != 0.0) return false;
  }
  return true;
}

RealPolynomial& RealPolynomial::operator+=(const RealPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator-=(const RealPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(const RealPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<double> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(double scalar) {
  for (double& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

void RealPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const RealPolynomial& p) {
  os << '[';
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (k) os << ", ";
    os << p.coeffs()[k];
  }
  return os << ']';
}

}  // namespace chaosrates
