#include <benchmark/benchmark.h>

#include "grover/circuit.hpp"
#include "grover/mc.hpp"
#include "grover/noise.hpp"

namespace {

using namespace grover;

void BM_GateLayerApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit grover_gate = build_grover_gate(n);
  StateVector psi(grover_gate.num_qubits(), 0);
  build_uniform_superposition(n).apply_to(psi);
  for (auto _ : state) {
    grover_gate.apply_to(psi);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<long>(grover_gate.flat_gates().size()));
}
BENCHMARK(BM_GateLayerApply)->DenseRange(2, 10);

void BM_NoisyTrajectory(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Circuit grover_gate = build_grover_gate(n);
  const NoiseParams params(1e-3, 1e-3);
  const StateVector input(grover_gate.num_qubits(), 0);
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RandomStream rng(12345, stream++);
    StateVector psi = run_noisy_trajectory(grover_gate, params, rng, input);
    benchmark::DoNotOptimize(psi.norm());
  }
}
BENCHMARK(BM_NoisyTrajectory)->DenseRange(2, 8);

void BM_SuccessCurve(benchmark::State& state) {
  const NoiseParams params(1e-3, 1e-3);
  for (auto _ : state) {
    McConfig cfg{1000, 7, 0, MemoryMode::Additive};
    benchmark::DoNotOptimize(estimate_success_curve(4, params, 10, cfg));
  }
}
BENCHMARK(BM_SuccessCurve);

}  // namespace

BENCHMARK_MAIN();
