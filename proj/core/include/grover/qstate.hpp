#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "grover/rng.hpp"

namespace grover {

using cplx = std::complex<double>;

enum class GateKind { H, X, Y, Z, CNOT, CZ, TOFFOLI };

// One gate instance. Qubit index convention everywhere in this project:
// qubit 0 is the least significant bit of the basis index.
struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;
  int q2 = -1;

  int arity() const;
  bool touches(int q) const { return q == q0 || q == q1 || q == q2; }
};

Gate make_h(int q);
Gate make_x(int q);
Gate make_y(int q);
Gate make_z(int q);
Gate make_cnot(int control, int target);
Gate make_cz(int a, int b);
Gate make_toffoli(int c1, int c2, int target);

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Pauli operator on a sparse support set. Y = [[0,-i],[i,0]].
struct PauliWord {
  std::vector<std::pair<int, Pauli>> terms;  // (qubit, letter), letter != I

  bool trivial() const { return terms.empty(); }
  void add(int qubit, Pauli p) {
    if (p != Pauli::I) terms.emplace_back(qubit, p);
  }
};

// Dense state vector over num_qubits() qubits, amplitudes indexed by the
// basis integer with qubit 0 as LSB.
class StateVector {
 public:
  StateVector() = default;
  // |index> on m qubits.
  StateVector(int m, std::uint64_t index);

  int num_qubits() const { return num_qubits_; }
  std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& amplitudes() { return amp_; }

  void apply_gate(const Gate& g);
  void apply_pauli_word(const PauliWord& w);

  // P(qubits in `subset` read `outcome_bits`), outcome_bits[i] pairs with
  // subset[i].
  double marginal_probability(const std::vector<int>& subset,
                              const std::vector<int>& outcome_bits) const;

  // Projective measurement of `subset`; collapses and renormalizes in
  // place. Returned bits pair with subset entries.
  std::vector<int> measure_qubits(const std::vector<int>& subset, RandomStream& rng);

  double norm() const;
  void normalize();

  // Pure state of the complement register conditioned on `subset` reading
  // `outcome_bits` (used to extract an accepted code block after its
  // verification partner was measured).
  StateVector extract_conditional(const std::vector<int>& subset,
                                  const std::vector<int>& outcome_bits) const;

  // Kronecker product; `high` occupies the upper qubit indices.
  static StateVector tensor(const StateVector& low, const StateVector& high);

 private:
  void apply_1q(int q, const cplx m00, const cplx m01, const cplx m10, const cplx m11);
  void check_qubit(int q) const;

  int num_qubits_ = 0;
  std::vector<cplx> amp_;
};

}  // namespace grover
