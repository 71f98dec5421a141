#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "grover/circuit.hpp"
#include "grover/qstate.hpp"
#include "grover/rng.hpp"

namespace grover {

// Depolarizing error strengths: epsilon per qubit per time step (memory),
// gamma per gate location.
struct NoiseParams {
  double epsilon = 0.0;
  double gamma = 0.0;

  NoiseParams() = default;
  NoiseParams(double eps, double gam) : epsilon(eps), gamma(gam) {
    if (eps < 0.0 || eps > 1.0 || gam < 0.0 || gam > 1.0)
      throw std::domain_error("NoiseParams: probabilities must be in [0,1]");
  }

  bool noiseless() const { return epsilon == 0.0 && gamma == 0.0; }

  // C = epsilon/gamma; infinity when gamma == 0.
  double ratio() const {
    return gamma == 0.0 ? std::numeric_limits<double>::infinity() : epsilon / gamma;
  }

  // Given epsilon and C, recovers gamma. C = infinity means gamma = 0.
  static NoiseParams from_ratio(double eps, double C) {
    if (!(C > 0.0)) throw std::domain_error("NoiseParams: C must be positive");
    return NoiseParams(eps, std::isinf(C) ? 0.0 : eps / C);
  }
};

// Whether a layer that contains gates also receives the per-step memory
// word on every qubit (Additive, the default) or only on the qubits no
// gate touched in that layer (Folded; sensitivity switch).
enum class MemoryMode { Additive, Folded };

// Independent depolarizing memory errors: per qubit I with prob 1-eps,
// else X/Y/Z each with prob eps/3.
PauliWord sample_memory_word(const std::vector<int>& active_qubits, double epsilon,
                             RandomStream& rng);

// Gate-location error on the gate's support: identity with prob 1-gamma,
// else one of the 3/15/63 nontrivial Pauli words, uniformly.
PauliWord sample_gate_error(const Gate& gate, double gamma, RandomStream& rng);

// Runs the circuit with sampled noise, mutating `state`. Per layer: each
// ideal gate followed by its gate-error word, then one memory word over
// the step's qubits.
void apply_noisy(const Circuit& circuit, const NoiseParams& params, RandomStream& rng,
                 StateVector& state, MemoryMode mode = MemoryMode::Additive);

// Same, but returns a fresh output state.
StateVector run_noisy_trajectory(const Circuit& circuit, const NoiseParams& params,
                                 RandomStream& rng, const StateVector& input,
                                 MemoryMode mode = MemoryMode::Additive);

}  // namespace grover
