#include <chaosrates/chaosrates.hpp>

#include <cmath>

int main() {
  const chaosrates::CoherentModel model(2, chaosrates::StructureFunction::exponential(0.1));
  return std::abs(model.initial_kernel() - 0.5) < 1e-15 ? 0 : 1;
}
