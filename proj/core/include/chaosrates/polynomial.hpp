#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace chaosrates {

/// Polynomial in one real variable with coefficients stored by ascending
/// power: coeffs()[k] multiplies x^k.
///
/// The representation is canonical: trailing zero coefficients are dropped
/// on every mutation, so the zero polynomial has an empty coefficient list
/// and degree() == -1.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coeffs);
  RealPolynomial(std::initializer_list<double> coeffs);

  static RealPolynomial constant(double value);
  static RealPolynomial monomial(int power, double coefficient = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^k; zero for k outside [0, degree()].
  double coeff(int k) const;
  double leading_coeff() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  double operator()(double x) const;

  /// Sum of |c_k| |x|^k; the natural scale for judging a residual p(x).
  double magnitude_at(double x) const;

  RealPolynomial derivative() const;

  /// The polynomial x -> p(scale * x).
  RealPolynomial rescaled(double scale) const;

  /// True when every coefficient with odd power vanishes.
  bool is_even() const;

  RealPolynomial& operator+=(const RealPolynomial& rhs);
  RealPolynomial& operator-=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(double scalar);

  friend RealPolynomial operator+(RealPolynomial lhs, const RealPolynomial& rhs) {
    return lhs += rhs;
  }
  friend RealPolynomial operator-(RealPolynomial lhs, const RealPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend RealPolynomial operator*(RealPolynomial lhs, const RealPolynomial& rhs) {
    return lhs *= rhs;
  }
  friend RealPolynomial operator*(RealPolynomial lhs, double scalar) { return lhs *= scalar; }
  friend RealPolynomial operator*(double scalar, RealPolynomial rhs) { return rhs *= scalar; }
  friend RealPolynomial operator-(RealPolynomial p) { return p *= -1.0; }

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RealPolynomial& p);

}  // namespace chaosrates
