#pragma once

#include <variant>
#include <vector>

#include "chaosrates/special_functions.hpp"

namespace chaosrates {

/// The deterministic chaos coefficient phi(s) of a single-factor model,
/// represented through its density phi^2(s) and cumulative
/// Q(t) = integral_0^t phi^2(s) ds.
///
/// Every instance is normalised so that Q(infinity) = 1. Density families
/// may be constructed unnormalised; the raw total mass is kept in
/// normalisation_scale(). Atom weights must already sum to one.
///
/// Time is measured in years throughout.
class StructureFunction {
 public:
  /// Density lambda e^{-lambda s} (after normalisation).
  struct Exponential {
    double rate;
  };

  /// Density values[i] on [breaks[i], breaks[i+1]), zero elsewhere.
  struct Piecewise {
    std::vector<double> breaks;
    std::vector<double> values;
  };

  /// phi^2(s) = sum_i weights[i] delta(s - times[i]); Q is the
  /// right-continuous step function sum_i weights[i] 1{times[i] <= t}.
  struct Atoms {
    std::vector<double> times;
    std::vector<double> weights;
  };

  enum class Family { kExponential, kPiecewise, kAtoms };

  /// Density amplitude * e^{-rate s}; amplitude defaults to the normalised
  /// value `rate`. The stored density is always rate * e^{-rate s}.
  static StructureFunction exponential(double rate);
  static StructureFunction exponential(double rate, double amplitude);

  /// breaks.size() == values.size() + 1; breaks strictly increasing from a
  /// nonnegative start; values nonnegative with positive total mass.
  static StructureFunction piecewise(std::vector<double> breaks, std::vector<double> values);

  /// Times strictly increasing and positive; weights in [0, 1] summing to one
  /// within 1e-9 (they are then rescaled to sum exactly).
  static StructureFunction atoms(std::vector<double> times, std::vector<double> weights);

  Family family() const;
  const Exponential* as_exponential() const { return std::get_if<Exponential>(&rep_); }
  const Piecewise* as_piecewise() const { return std::get_if<Piecewise>(&rep_); }
  const Atoms* as_atoms() const { return std::get_if<Atoms>(&rep_); }

  bool has_density() const { return family() != Family::kAtoms; }

  /// Total mass of the density as supplied, before rescaling to one.
  double normalisation_scale() const { return scale_; }

  /// Q(t); zero for t <= 0.
  double q_at(double t) const;

  /// 1 - Q(t), evaluated directly so that it keeps full relative precision
  /// when Q(t) is close to one.
  double tail(double t) const;

  /// phi^2(t), right-continuous. Throws std::logic_error for atom families,
  /// where the density is a sum of Dirac masses.
  double density(double t) const;

  /// phi(t) = sqrt(phi^2(t)).
  double phi(double t) const;

 private:
  using Rep = std::variant<Exponential, Piecewise, Atoms>;
  StructureFunction(Rep rep, double scale) : rep_(std::move(rep)), scale_(scale) {}

  Rep rep_;
  double scale_ = 1.0;
};

/// Integral over (from, to] of phi_a(s) phi_b(s) ds.
///
/// Closed form for every pairing of density families. For two atom families
/// the product sqrt(p_a delta) sqrt(q_b delta) is taken to be
/// sqrt(p_a q_b) delta at coincident atom times and zero otherwise.
/// A density paired with an atom family has no meaning and is rejected with
/// std::invalid_argument.
double overlap_integral(const StructureFunction& a, const StructureFunction& b, double from,
                        ExtendedReal to);

/// k-fold iterated simplex integral of phi_a phi_b over (t, infinity):
///   <phi_a, phi_b>_t^{(k)} = (integral_t^inf phi_a phi_b)^k / k!,
/// equal to 1 for k = 0.
double cross_inner_product(const StructureFunction& a, const StructureFunction& b, double t,
                           int k);

/// A point (t, R_t, Q_t) of the Gaussian driver R_t = integral_0^t phi dW.
struct GaussianState {
  double t = 0.0;
  double R = 0.0;
  double Q = 0.0;

  static GaussianState initial() { return {}; }

  /// State at time t with driver value R, taking Q from the structure function.
  static GaussianState at(const StructureFunction& sf, double t, double R);

  /// Throws std::invalid_argument unless Q lies in [0, 1] and t >= 0.
  void validate() const;
};

}  // namespace chaosrates
