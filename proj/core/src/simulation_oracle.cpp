#include "chaosrates/simulation_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "chaosrates/special_functions.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace chaosrates {

namespace {

constexpr std::size_t kBatchSize = 8192;
constexpr double kQuadratureBound = 12.0;
constexpr double kQuadratureTolerance = 1e-10;
constexpr int kMaxSimpsonDepth = 50;
// Starting panels of width 0.01 so that narrow positive lobes between close
// roots are sampled before the error estimate is trusted.
constexpr int kQuadraturePanels = 2400;

// Runs draw(engine) `samples` times across per-batch streams and reduces in
// batch order.
template <typename Draw>
McEstimate run_batches(std::size_t samples, std::uint64_t seed, const Draw& draw) {
  if (samples < 2) throw std::invalid_argument("Monte Carlo: need at least two samples");
  const std::size_t batches = (samples + kBatchSize - 1) / kBatchSize;
  std::vector<double> sums(batches), squares(batches);
  detail::parallel_for(batches, [&](std::size_t b) {
    auto engine = detail::stream_engine(seed, b);
    const std::size_t begin = b * kBatchSize;
    const std::size_t end = std::min(samples, begin + kBatchSize);
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double x = draw(engine);
      s += x;
      s2 += x * x;
    }
    sums[b] = s;
    squares[b] = s2;
  });
  const double n = static_cast<double>(samples);
  const double mean = detail::pairwise_sum(sums.data(), batches) / n;
  const double second = detail::pairwise_sum(squares.data(), batches) / n;
  const double var = std::max(0.0, (second - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n)};
}

// Symmetric square root of a PSD matrix (row-major), negative eigenvalues
// from rounding clipped to zero.
Eigen::MatrixXd psd_root(const std::vector<double>& m, std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd a = Eigen::Map<const Eigen::MatrixXd>(m.data(), d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd root = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * root.asDiagonal() * solver.eigenvectors().transpose();
}

double expiry_of(const Contract& c) {
  if (const auto* b = std::get_if<BondSpec>(&c)) {
    if (!(b->maturity >= 0.0)) throw std::invalid_argument("bond spec: maturity must be >= 0");
    return b->maturity;
  }
  if (const auto* o = std::get_if<OptionSpec>(&c)) {
    o->validate();
    return o->option_maturity;
  }
  const auto& s = std::get<SwaptionSpec>(c);
  s.validate();
  return s.option_maturity;
}

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // The relative floor stops refinement once the estimate is at rounding level.
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol ||
      std::abs(delta) <= 1e-14 * std::abs(left + right)) {
    return left + right + delta / 15.0;
  }
  return simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

ChaosPath simulate_chaos_sde(const CoherentModel& model, int m, double horizon, double dt,
                             std::uint64_t seed, std::size_t stride) {
  const auto& sf = model.structure();
  if (!sf.has_density()) {
    throw std::invalid_argument("simulate_chaos_sde: atom families have no density; use finite_dim");
  }
  if (m < 1) throw std::invalid_argument("simulate_chaos_sde: order must be >= 1");
  if (!(dt > 0.0) || !(horizon > 0.0)) {
    throw std::invalid_argument("simulate_chaos_sde: need dt > 0 and horizon > 0");
  }
  if (stride == 0) throw std::invalid_argument("simulate_chaos_sde: stride must be positive");

  const auto steps = static_cast<std::size_t>(std::max(1.0, std::round(horizon / dt)));
  const double h = horizon / static_cast<double>(steps);
  const double sqrt_h = std::sqrt(h);

  auto engine = detail::stream_engine(seed, 0);
  std::normal_distribution<double> normal;
  std::vector<double> x(static_cast<std::size_t>(m) + 1, 0.0);
  x[0] = 1.0;
  double R = 0.0;

  ChaosPath path;
  path.X.resize(x.size());
  auto record = [&](double t) {
    path.times.push_back(t);
    path.R.push_back(R);
    path.Q.push_back(sf.q_at(t));
    for (std::size_t j = 0; j < x.size(); ++j) path.X[j].push_back(x[j]);
  };
  record(0.0);
  for (std::size_t s = 0; s < steps; ++s) {
    const double t = h * static_cast<double>(s);
    const double dw = sf.phi(t) * sqrt_h * normal(engine);
    // Descending j so each update sees the previous step's X^{(j-1)}.
    for (std::size_t j = x.size() - 1; j >= 1; --j) x[j] += x[j - 1] * dw;
    R += dw;
    if ((s + 1) % stride == 0 || s + 1 == steps) record(h * static_cast<double>(s + 1));
  }
  return path;
}

McEstimate mc_price(const CoherentModel& model, const Contract& contract, std::size_t samples,
                    std::uint64_t seed) {
  const double expiry = expiry_of(contract);
  const auto& sf = model.structure();
  const int n = model.order();
  const double scale = factorial(n);
  const double qt = sf.q_at(expiry);
  const double sd = std::sqrt(qt);

  // Kernel numerators at expiry for each maturity the payoff references.
  std::vector<double> q_refs;
  std::function<double(const std::vector<double>&, double)> payoff;
  if (std::holds_alternative<BondSpec>(contract)) {
    payoff = [](const std::vector<double>&, double pi) { return pi; };
  } else if (const auto* o = std::get_if<OptionSpec>(&contract)) {
    q_refs = {sf.q_at(o->bond_maturity)};
    const double K = o->strike;
    payoff = [K](const std::vector<double>& num, double pi) {
      return std::max(num[0] - K * pi, 0.0);
    };
  } else {
    const auto& s = std::get<SwaptionSpec>(contract);
    for (double d : s.payment_dates) q_refs.push_back(sf.q_at(d));
    const double K = s.strike;
    payoff = [K](const std::vector<double>& num, double pi) {
      double v = pi - num.back();
      for (double x : num) v -= K * x;
      return std::max(v, 0.0);
    };
  }

  return run_batches(samples, seed, [&](std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    const double R = sd * normal(engine);
    std::vector<double> num(q_refs.size());
    for (std::size_t i = 0; i < q_refs.size(); ++i) num[i] = kernel_numerator(n, R, qt, q_refs[i]);
    return scale * payoff(num, kernel_numerator(n, R, qt, qt));
  });
}

McEstimate mc_price(const IncoherentModel& model, const Contract& contract, std::size_t samples,
                    std::uint64_t seed) {
  const double expiry = expiry_of(contract);
  const std::size_t m = model.size();
  const double pi0 = kernel(model, MultiGaussianState::make(model, 0.0, std::vector<double>(m, 0.0)));
  const Eigen::MatrixXd root = psd_root(driver_covariance(model, expiry), m);
  const MultiGaussianState base =
      MultiGaussianState::make(model, expiry, std::vector<double>(m, 0.0));

  return run_batches(samples, seed, [&](std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = normal(engine);
    const Eigen::VectorXd r = root * z;
    MultiGaussianState state = base;
    for (std::size_t i = 0; i < m; ++i) state.R[i] = r[static_cast<Eigen::Index>(i)];
    const double pi = kernel(model, state);
    double value = 0.0;
    if (std::holds_alternative<BondSpec>(contract)) {
      value = pi;
    } else if (const auto* o = std::get_if<OptionSpec>(&contract)) {
      value = pi * std::max(incoherent_bond_price(model, state, o->bond_maturity) - o->strike, 0.0);
    } else {
      const auto& s = std::get<SwaptionSpec>(contract);
      double v = 1.0 - incoherent_bond_price(model, state, s.payment_dates.back());
      for (double d : s.payment_dates) v -= s.strike * incoherent_bond_price(model, state, d);
      value = pi * std::max(v, 0.0);
    }
    return value / pi0;
  });
}

McEstimate mc_conditional_variance(const CoherentModel& model, const GaussianState& state,
                                   std::size_t samples, std::uint64_t seed) {
  state.validate();
  const int n = model.order();
  const double residual = model.structure().tail(state.t);
  const double q_inf = state.Q + residual;
  const double sd = std::sqrt(residual);
  const double mean = chaos_martingale(n, state.R, state.Q);
  return run_batches(samples, seed, [&](std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    const double d = chaos_martingale(n, state.R + sd * normal(engine), q_inf) - mean;
    return d * d;
  });
}

McEstimate mc_conditional_variance(const IncoherentModel& model, const MultiGaussianState& state,
                                   std::size_t samples, std::uint64_t seed) {
  const std::size_t m = model.size();
  if (state.R.size() != m) throw std::invalid_argument("mc_conditional_variance: state size mismatch");
  const auto& terms = model.terms();
  const Eigen::MatrixXd root = psd_root(state.residual_gram, m);
  double mean = 0.0;
  std::vector<double> q_inf(m);
  for (std::size_t i = 0; i < m; ++i) {
    mean += terms[i].weight * chaos_martingale(terms[i].order, state.R[i], state.Q[i]);
    q_inf[i] = state.Q[i] + state.residual(i, i);
  }
  return run_batches(samples, seed, [&](std::mt19937_64& engine) {
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(static_cast<Eigen::Index>(m));
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = normal(engine);
    const Eigen::VectorXd r = root * z;
    double x = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      x += terms[i].weight *
           chaos_martingale(terms[i].order, state.R[i] + r[static_cast<Eigen::Index>(i)], q_inf[i]);
    }
    const double d = x - mean;
    return d * d;
  });
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tolerance, int panels) {
  if (!(b > a)) return 0.0;
  if (panels < 1) throw std::invalid_argument("integrate_adaptive: panels must be >= 1");
  const double width = (b - a) / panels;
  const double tol = tolerance / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + width * i;
    const double hi = i + 1 == panels ? b : lo + width;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fhi = f(hi), fmid = f(mid);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    total += simpson(f, lo, flo, hi, fhi, mid, fmid, whole, tol, kMaxSimpsonDepth);
  }
  return total;
}

double quadrature_price(const RealPolynomial& payoff, int order) {
  if (payoff.degree() > kMaxPayoffDegree) {
    throw std::invalid_argument("quadrature_price: payoff degree too high");
  }
  const auto integrand = [&payoff](double z) {
    return std::max(payoff(z), 0.0) * normal_pdf(z);
  };
  return factorial(order) *
         integrate_adaptive(integrand, -kQuadratureBound, kQuadratureBound, kQuadratureTolerance,
                            kQuadraturePanels);
}

}  // namespace chaosrates
