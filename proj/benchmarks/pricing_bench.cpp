#include <benchmark/benchmark.h>

#include "chaosrates/chaosrates.hpp"

namespace {

using namespace chaosrates;

void BM_ExpectedPositivePart(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto payoff = call_payoff_polynomial(order, 0.26, 0.63, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(expected_positive_part(payoff).value);
}
BENCHMARK(BM_ExpectedPositivePart)->DenseRange(2, 8, 2);

void BM_QuadraturePrice(benchmark::State& state) {
  const auto payoff = call_payoff_polynomial(3, 0.26, 0.63, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_price(payoff, 3));
}
BENCHMARK(BM_QuadraturePrice);

void BM_KernelValue(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const GaussianState s{2.0, 0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_value(order, s));
}
BENCHMARK(BM_KernelValue)->RangeMultiplier(2)->Range(1, 16);

void BM_IncoherentKernel(benchmark::State& state) {
  const IncoherentModel model({{1.0, 3, StructureFunction::exponential(0.4)},
                               {0.6, 3, StructureFunction::exponential(0.1)},
                               {0.3, 3, StructureFunction::exponential(0.02)}});
  const auto s = MultiGaussianState::make(model, 2.0, {0.2, -0.1, 0.05});
  for (auto _ : state) benchmark::DoNotOptimize(incoherent_kernel(model, s));
}
BENCHMARK(BM_IncoherentKernel);

void BM_SimulatePaths(benchmark::State& state) {
  std::vector<double> times, weights;
  for (int i = 1; i <= 10; ++i) {
    times.push_back(i);
    weights.push_back(0.08);
  }
  weights.push_back(0.2);
  const AtomGrid grid(times, std::nullopt, weights);
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_paths(grid, 2, 8.0, count, 1).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulatePaths)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
