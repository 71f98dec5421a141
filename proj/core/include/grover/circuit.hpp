#pragma once

#include <string>
#include <vector>

#include "grover/qstate.hpp"

namespace grover {

// Layered gate list. A layer is one time step; gates within a layer act
// on pairwise-disjoint qubits. Ancillas sit contiguously above the data
// register.
struct Circuit {
  int num_data_qubits = 0;
  int num_ancilla_qubits = 0;
  std::vector<std::vector<Gate>> layers;
  std::vector<std::string> labels;  // optional, parallel to layers

  int num_qubits() const { return num_data_qubits + num_ancilla_qubits; }
  int num_layers() const { return static_cast<int>(layers.size()); }
  std::vector<Gate> flat_gates() const;

  // Applies every layer in order, no noise.
  void apply_to(StateVector& state) const;

  void append(const Circuit& other);
  void check_invariants() const;
};

struct ResourceCounts {
  long toffoli = 0;
  long hadamard = 0;
  long x = 0;
  long y = 0;
  long z = 0;
  long cnot = 0;
  long cz = 0;
  long time_steps = 0;
  long ancillas = 0;
};

// Closed-form gate budget quoted for the one-iteration network (initial
// superposition plus one Grover gate): 2(n-2) Toffolis, 3n Hadamards,
// 2(2n-1) X, 2 Z, 2n+6 time steps, n-3 ancillas. Kept as reference
// metadata; the built circuit matches the 1-qubit gate counts but uses
// more Toffolis for n >= 4 (uncomputed ancilla cascade).
ResourceCounts paper_resource_formulas(int n);

// Counts gates/steps of the given circuit as built.
ResourceCounts resource_counts(const Circuit& circuit);

// One layer of Hadamards over the n-qubit data register.
Circuit build_uniform_superposition(int n);

// C^k(X) with k = controls.size() >= 2, as a Toffoli cascade. k = 2 is a
// single Toffoli; k >= 3 needs k-2 ancillas (AND-chain computed into the
// ancillas, final controlled flip, chain uncomputed, 2k-3 Toffolis total).
std::vector<Gate> decompose_cnx(const std::vector<int>& controls, int target,
                                const std::vector<int>& ancillas);

// The oracle piece alone: |x> -> (-1)^[x = 0...0] |x> on the data
// register. Same ancilla layout as build_grover_gate.
Circuit build_oracle(int n);

// One Grover iteration for the searched state |0...0>: oracle phase flip
// on |0^n| followed by the inversion about the mean, scheduled ASAP.
// Requires n >= 2; allocates max(0, n-3) ancillas above the data register.
Circuit build_grover_gate(int n);

// Number of ancillas build_grover_gate allocates for a given n.
int grover_ancilla_count(int n);

// Greedy as-soon-as-possible layering that preserves per-qubit gate order.
Circuit schedule_layers(const std::vector<Gate>& gates, int num_data, int num_ancilla);

// Text diagram, one layer per line.
std::string pretty_print(const Circuit& circuit);

// Machine-readable dump: one gate per line "layer kind q0 [q1 [q2]]".
std::string dump_gates(const Circuit& circuit);

}  // namespace grover
