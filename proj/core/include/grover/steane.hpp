#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "grover/circuit.hpp"
#include "grover/mc.hpp"
#include "grover/noise.hpp"
#include "grover/qstate.hpp"

namespace grover {

// Classical tables behind the [[7,1,3]] code: the Hamming pair
// C = [7,4,3] and its dual C_perp = [7,3,4], with syndrome decoding.
// Codewords are 7-bit masks, position i on bit i.
class CodeTables {
 public:
  static CodeTables standard();

  const std::array<int, 3>& parity_check_rows() const { return h_rows_; }
  const std::array<int, 3>& dual_generator_rows() const { return h_rows_; }
  const std::vector<int>& dual_codewords() const { return dual_; }   // 8
  const std::vector<int>& code_codewords() const { return code_; }   // 16

  int syndrome(int word) const;
  bool in_code(int word) const;
  bool in_dual(int word) const;

  // Verified by exhaustive enumeration at construction.
  int min_distance_code() const { return d_code_; }
  int min_distance_dual() const { return d_dual_; }

 private:
  CodeTables() = default;
  std::array<int, 3> h_rows_{};
  std::vector<int> dual_, code_;
  std::array<bool, 128> is_code_{}, is_dual_{};
  int d_code_ = 0, d_dual_ = 0;
};

struct DecodeResult {
  int logical = 0;
  int corrected_word = 0;
  bool detected = false;  // a weight-1 correction was applied
  bool failure = false;   // corrected word not in C
};

// Syndrome decode of a measured 7-bit word: weight-1 correction, then
// coset identification (C_perp -> 0, its complement in C -> 1).
DecodeResult classical_decode(int word, const CodeTables& tables);

// Uniform superposition over the eight C_perp codewords.
StateVector logical_zero_ideal(const CodeTables& tables);
StateVector logical_one_ideal(const CodeTables& tables);

struct WeightEquivalenceReport {
  bool ok = false;
  // v (weight 2) -> u (weight 1) with X_v|0_E> = X_u|1_E>.
  std::vector<std::pair<int, int>> pairs;
  int counterexample = -1;  // v with no partner, when !ok
};

// Checks, amplitude-exactly, that every weight-2 bit-flip on |0_E> equals
// a weight-1 bit-flip on |1_E> and conversely.
WeightEquivalenceReport weight_equivalence_check(const CodeTables& tables);

// Non-fault-tolerant |0_E> synthesis from the C_perp generator rows:
// Hadamards on the pilot qubits, CNOT fan-out per row. 7 qubits.
Circuit build_zero_synthesis_network(const CodeTables& tables);

// Qubit-wise gate across 7-qubit blocks given by their starting indices.
// H/X/Z take one block; CNOT and CZ take (control_block, target_block).
std::vector<Gate> transversal_gate(GateKind kind, const std::vector<int>& block_starts);

struct PrepResult {
  bool ok = false;
  StateVector state;  // accepted 7-qubit block (when ok)
  int attempts = 0;
};

// Verified |0_E> preparation: noisy synthesis of a data and a check
// block, transversal CNOT, gamma-noisy measurement of the check block;
// accept only a measured word in C_perp, otherwise restart from scratch.
PrepResult prepare_zero_ft(const CodeTables& tables, const NoiseParams& params,
                           RandomStream& rng, int max_restarts,
                           MemoryMode mode = MemoryMode::Additive);

struct PrepErrorEstimate {
  double rate = 0.0;       // post-acceptance uncorrectable bit-flip probability
  double stderr_ = 0.0;
  double mean_attempts = 0.0;
  long accepted = 0;
  long n_trajectories = 0;
};

PrepErrorEstimate estimate_prep_logical_error(const NoiseParams& params,
                                              const McConfig& cfg, int max_restarts);

struct EncodedExperimentResult {
  double epsilon = 0.0;
  double gamma = 0.0;
  double C = 0.0;
  double encoded_ps = 0.0;
  double encoded_stderr = 0.0;
  double bare_ps = 0.0;
  double bare_stderr = 0.0;
  double mean_attempts = 0.0;
  long prep_failures = 0;
  long n_trajectories = 0;
  std::uint64_t master_seed = 0;
};

// Encoded two-qubit Grover run (one iteration, searched state |00>)
// against the bare n=2 network at the same noise strengths. Success of
// the encoded arm is the probability that both blocks decode to logical
// 0 after the terminal measurement.
EncodedExperimentResult run_encoded_experiment(double epsilon, double C_ratio,
                                               const McConfig& cfg,
                                               int max_restarts = 64);

}  // namespace grover
