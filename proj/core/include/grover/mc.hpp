#pragma once

#include <cstdint>
#include <vector>

#include "grover/circuit.hpp"
#include "grover/noise.hpp"

namespace grover {

// Common Monte Carlo run controls. workers <= 0 means all hardware
// threads; results never depend on the worker count.
struct McConfig {
  long n_trajectories = 10000;
  std::uint64_t master_seed = 0;
  int workers = 0;
  MemoryMode mode = MemoryMode::Additive;
};

// Success probability estimate per Grover iteration t = 0..T. t = 0 is
// the (noisy) uniform-superposition state itself.
struct SuccessCurve {
  int n = 0;
  NoiseParams params;
  std::vector<double> p_success;  // index t
  std::vector<double> std_err;
  long n_trajectories = 0;
  std::uint64_t master_seed = 0;

  int max_t() const { return static_cast<int>(p_success.size()) - 1; }
};

// Trajectory count rule: at least 10*max(1/eps, 1/gamma), never below
// the floor.
long required_trajectories(const NoiseParams& params, long n_floor = 10000);

SuccessCurve estimate_success_curve(int n, const NoiseParams& params, int T,
                                    const McConfig& cfg);

// Mean squared coefficient per data basis state at one iteration count,
// plus the per-Hamming-weight aggregates.
struct WeightHistogram {
  int n = 0;
  int t = 0;
  std::vector<double> mean_sq;       // 2^n entries, ancillas traced out
  std::vector<double> std_err;       // per basis state
  std::vector<double> weight_mean;   // n+1 entries, mean over states of that weight
};

std::vector<WeightHistogram> coefficient_histogram(int n, const NoiseParams& params,
                                                   const std::vector<int>& t_values,
                                                   const McConfig& cfg);

}  // namespace grover
