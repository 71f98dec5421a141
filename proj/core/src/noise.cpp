#include "grover/noise.hpp"

namespace grover {

PauliWord sample_memory_word(const std::vector<int>& active_qubits, double epsilon,
                             RandomStream& rng) {
  PauliWord w;
  if (epsilon <= 0.0) return w;
  for (int q : active_qubits) {
    const double u = rng.uniform();
    if (u >= epsilon) continue;
    const int letter = std::min(2, static_cast<int>(u / (epsilon / 3.0)));
    w.add(q, static_cast<Pauli>(letter + 1));
  }
  return w;
}

PauliWord sample_gate_error(const Gate& gate, double gamma, RandomStream& rng) {
  PauliWord w;
  if (gamma <= 0.0) return w;
  if (rng.uniform() >= gamma) return w;
  const int arity = gate.arity();
  const std::uint64_t nontrivial = (std::uint64_t{1} << (2 * arity)) - 1;  // 3, 15, 63
  std::uint64_t code = rng.uniform_int(nontrivial) + 1;
  const int qs[3] = {gate.q0, gate.q1, gate.q2};
  for (int k = 0; k < arity; ++k) {
    w.add(qs[k], static_cast<Pauli>(code & 3));
    code >>= 2;
  }
  return w;
}

void apply_noisy(const Circuit& circuit, const NoiseParams& params, RandomStream& rng,
                 StateVector& state, MemoryMode mode) {
  if (state.num_qubits() != circuit.num_qubits())
    throw std::domain_error("apply_noisy: register size mismatch");

  std::vector<int> all_qubits(circuit.num_qubits());
  for (int q = 0; q < circuit.num_qubits(); ++q) all_qubits[q] = q;

  for (const auto& layer : circuit.layers) {
    // Gate operates before its error proceeds.
    for (const Gate& g : layer) {
      state.apply_gate(g);
      const PauliWord err = sample_gate_error(g, params.gamma, rng);
      if (!err.trivial()) state.apply_pauli_word(err);
    }
    std::vector<int> memory_qubits;
    if (mode == MemoryMode::Additive) {
      memory_qubits = all_qubits;
    } else {
      for (int q = 0; q < circuit.num_qubits(); ++q) {
        bool touched = false;
        for (const Gate& g : layer) touched = touched || g.touches(q);
        if (!touched) memory_qubits.push_back(q);
      }
    }
    const PauliWord mem = sample_memory_word(memory_qubits, params.epsilon, rng);
    if (!mem.trivial()) state.apply_pauli_word(mem);
  }
}

StateVector run_noisy_trajectory(const Circuit& circuit, const NoiseParams& params,
                                 RandomStream& rng, const StateVector& input,
                                 MemoryMode mode) {
  StateVector out = input;
  apply_noisy(circuit, params, rng, out, mode);
  return out;
}

}  // namespace grover
