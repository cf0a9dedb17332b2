#include "chaosrates/structure_function.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chaosrates {

namespace {

constexpr double kAtomWeightTolerance = 1e-9;

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

// Integral of e^{-mu s} over [lo, hi]; hi may be +inf.
double exp_integral(double mu, double lo, double hi) {
  if (hi <= lo) return 0.0;
  // e^{-mu lo} (1 - e^{-mu (hi - lo)}) / mu keeps precision for short spans.
  return std::exp(-mu * lo) * -std::expm1(-mu * (hi - lo)) / mu;
}

double pw_pw(const StructureFunction::Piecewise& a, const StructureFunction::Piecewise& b,
             double lo, double hi) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    for (std::size_t j = 0; j < b.values.size(); ++j) {
      const double l = std::max({lo, a.breaks[i], b.breaks[j]});
      const double h = std::min({hi, a.breaks[i + 1], b.breaks[j + 1]});
      if (h > l) sum += std::sqrt(a.values[i] * b.values[j]) * (h - l);
    }
  }
  return sum;
}

double pw_exp(const StructureFunction::Piecewise& a, const StructureFunction::Exponential& b,
              double lo, double hi) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double l = std::max(lo, a.breaks[i]);
    const double h = std::min(hi, a.breaks[i + 1]);
    if (h > l) sum += std::sqrt(a.values[i] * b.rate) * exp_integral(0.5 * b.rate, l, h);
  }
  return sum;
}

double exp_exp(const StructureFunction::Exponential& a, const StructureFunction::Exponential& b,
               double lo, double hi) {
  return std::sqrt(a.rate * b.rate) * exp_integral(0.5 * (a.rate + b.rate), lo, hi);
}

double atoms_atoms(const StructureFunction::Atoms& a, const StructureFunction::Atoms& b,
                   double lo, double hi) {
  double sum = 0.0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    while (j < b.times.size() && b.times[j] < a.times[i]) ++j;
    if (j < b.times.size() && b.times[j] == a.times[i] && a.times[i] > lo && a.times[i] <= hi) {
      sum += std::sqrt(a.weights[i] * b.weights[j]);
    }
  }
  return sum;
}

}  // namespace

StructureFunction StructureFunction::exponential(double rate) { return exponential(rate, rate); }

StructureFunction StructureFunction::exponential(double rate, double amplitude) {
  require(std::isfinite(rate) && rate > 0.0, "exponential structure function: rate must be > 0");
  require(std::isfinite(amplitude) && amplitude > 0.0,
          "exponential structure function: amplitude must be > 0");
  return StructureFunction(Exponential{rate}, amplitude / rate);
}

StructureFunction StructureFunction::piecewise(std::vector<double> breaks,
                                               std::vector<double> values) {
  require(!values.empty() && breaks.size() == values.size() + 1,
          "piecewise structure function: need breaks.size() == values.size() + 1");
  require(std::isfinite(breaks.front()) && breaks.front() >= 0.0,
          "piecewise structure function: breaks must start at a nonnegative time");
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    require(std::isfinite(breaks[i]) && breaks[i] > breaks[i - 1],
            "piecewise structure function: breaks must be strictly increasing");
  }
  double mass = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] >= 0.0,
            "piecewise structure function: values must be nonnegative");
    mass += values[i] * (breaks[i + 1] - breaks[i]);
  }
  require(mass > 0.0, "piecewise structure function: total mass must be positive");
  for (double& v : values) v /= mass;
  return StructureFunction(Piecewise{std::move(breaks), std::move(values)}, mass);
}

StructureFunction StructureFunction::atoms(std::vector<double> times,
                                           std::vector<double> weights) {
  require(!times.empty() && times.size() == weights.size(),
          "atom structure function: times and weights must have equal nonzero length");
  for (std::size_t i = 0; i < times.size(); ++i) {
    require(std::isfinite(times[i]) && times[i] > 0.0,
            "atom structure function: atom times must be positive");
    require(i == 0 || times[i] > times[i - 1],
            "atom structure function: atom times must be strictly increasing");
    require(std::isfinite(weights[i]) && weights[i] >= 0.0 && weights[i] <= 1.0,
            "atom structure function: weights must lie in [0, 1]");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > kAtomWeightTolerance) {
    throw std::invalid_argument("atom structure function: weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
  if (total != 1.0) {
    for (double& w : weights) w /= total;
  }
  return StructureFunction(Atoms{std::move(times), std::move(weights)}, 1.0);
}

StructureFunction::Family StructureFunction::family() const {
  switch (rep_.index()) {
    case 0:
      return Family::kExponential;
    case 1:
      return Family::kPiecewise;
    default:
      return Family::kAtoms;
  }
}

double StructureFunction::q_at(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (const auto* e = as_exponential()) return -std::expm1(-e->rate * t);
  if (const auto* p = as_piecewise()) {
    double q = 0.0;
    for (std::size_t i = 0; i < p->values.size(); ++i) {
      const double h = std::min(t, p->breaks[i + 1]);
      if (h > p->breaks[i]) q += p->values[i] * (h - p->breaks[i]);
    }
    return std::min(q, 1.0);
  }
  const auto& a = *as_atoms();
  double q = 0.0;
  for (std::size_t i = 0; i < a.times.size() && a.times[i] <= t; ++i) q += a.weights[i];
  return std::min(q, 1.0);
}

double StructureFunction::tail(double t) const {
  if (!(t > 0.0)) return 1.0;
  if (const auto* e = as_exponential()) return std::exp(-e->rate * t);
  if (const auto* p = as_piecewise()) {
    double r = 0.0;
    for (std::size_t i = 0; i < p->values.size(); ++i) {
      const double l = std::max(t, p->breaks[i]);
      if (p->breaks[i + 1] > l) r += p->values[i] * (p->breaks[i + 1] - l);
    }
    return std::min(r, 1.0);
  }
  const auto& a = *as_atoms();
  double r = 0.0;
  for (std::size_t i = 0; i < a.times.size(); ++i) {
    if (a.times[i] > t) r += a.weights[i];
  }
  return std::min(r, 1.0);
}

double StructureFunction::density(double t) const {
  if (const auto* e = as_exponential()) return t < 0.0 ? 0.0 : e->rate * std::exp(-e->rate * t);
  if (const auto* p = as_piecewise()) {
    for (std::size_t i = 0; i < p->values.size(); ++i) {
      if (t >= p->breaks[i] && t < p->breaks[i + 1]) return p->values[i];
    }
    return 0.0;
  }
  throw std::logic_error("StructureFunction::density: atom family has no pointwise density");
}

double StructureFunction::phi(double t) const { return std::sqrt(density(t)); }

double overlap_integral(const StructureFunction& a, const StructureFunction& b, double from,
                        ExtendedReal to) {
  const double lo = std::max(from, 0.0);
  const double hi = to.value();
  if (!(hi > lo)) return 0.0;

  const auto* aa = a.as_atoms();
  const auto* ba = b.as_atoms();
  if (aa && ba) return atoms_atoms(*aa, *ba, lo, hi);
  if (aa || ba) {
    throw std::invalid_argument(
        "overlap_integral: product of an atom family with a density family is undefined");
  }
  if (const auto* ae = a.as_exponential()) {
    if (const auto* be = b.as_exponential()) return exp_exp(*ae, *be, lo, hi);
    return pw_exp(*b.as_piecewise(), *ae, lo, hi);
  }
  if (const auto* be = b.as_exponential()) return pw_exp(*a.as_piecewise(), *be, lo, hi);
  return pw_pw(*a.as_piecewise(), *b.as_piecewise(), lo, hi);
}

double cross_inner_product(const StructureFunction& a, const StructureFunction& b, double t,
                           int k) {
  if (k < 0) throw std::invalid_argument("cross_inner_product: negative order");
  if (t < 0.0) throw std::invalid_argument("cross_inner_product: negative time");
  if (k == 0) return 1.0;
  const double first = overlap_integral(a, b, t, ExtendedReal::plus_infinity());
  return std::pow(first, k) / factorial(k);
}

GaussianState GaussianState::at(const StructureFunction& sf, double t, double R) {
  GaussianState s{t, R, sf.q_at(t)};
  s.validate();
  return s;
}

void GaussianState::validate() const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("GaussianState: t must be >= 0");
  if (!std::isfinite(R)) throw std::invalid_argument("GaussianState: R must be finite");
  if (!(Q >= 0.0 && Q <= 1.0)) throw std::invalid_argument("GaussianState: Q must lie in [0, 1]");
}

}  // namespace chaosrates
