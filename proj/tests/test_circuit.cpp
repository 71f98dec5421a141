#include <cmath>
#include <numbers>

#include "doctest.h"
#include "grover/circuit.hpp"
#include "support/testutil.hpp"

using namespace grover;

namespace {

// Applies the gate list to a basis state and returns the resulting basis
// index (valid only when the list is classical on basis states).
std::uint64_t classical_action(const std::vector<Gate>& gates, int m, std::uint64_t in) {
  StateVector s(m, in);
  for (const auto& g : gates) s.apply_gate(g);
  for (std::uint64_t i = 0; i < s.dim(); ++i)
    if (std::abs(s.amplitudes()[i]) > 0.5) return i;
  FAIL("state is not a basis state");
  return 0;
}

}  // namespace

TEST_CASE("uniform superposition layer") {
  Circuit c = build_uniform_superposition(5);
  CHECK(c.num_layers() == 1);
  StateVector s(5, 0);
  c.apply_to(s);
  for (std::uint64_t i = 0; i < 32; ++i)
    CHECK(std::norm(s.amplitudes()[i]) == doctest::Approx(1.0 / 32));
}

TEST_CASE("decompose_cnx: k=2 is a single toffoli") {
  const auto gates = decompose_cnx({0, 1}, 2, {});
  REQUIRE(gates.size() == 1);
  CHECK(gates[0].kind == GateKind::TOFFOLI);
}

TEST_CASE("decompose_cnx: k=3 brute force over all inputs") {
  const auto gates = decompose_cnx({0, 1, 2}, 3, {4});
  CHECK(gates.size() == 3);
  for (std::uint64_t in = 0; in < 16; ++in) {
    const std::uint64_t out = classical_action(gates, 5, in);
    const bool all_controls = (in & 0b111) == 0b111;
    std::uint64_t want = all_controls ? (in ^ 0b1000) : in;
    CHECK(out == want);  // ancilla bit 4 restored to 0
  }
}

TEST_CASE("decompose_cnx: k=4 brute force with ancilla restoration") {
  const auto gates = decompose_cnx({0, 1, 2, 3}, 4, {5, 6});
  CHECK(gates.size() == 5);
  for (std::uint64_t in = 0; in < 32; ++in) {
    const std::uint64_t out = classical_action(gates, 7, in);
    const bool all_controls = (in & 0b1111) == 0b1111;
    CHECK(out == (all_controls ? (in ^ 0b10000) : in));
  }
}

TEST_CASE("decompose_cnx: insufficient ancillas") {
  CHECK_THROWS_AS(decompose_cnx({0, 1, 2}, 3, {}), std::domain_error);
}

TEST_CASE("grover gate requires n >= 2") {
  CHECK_THROWS_AS(build_grover_gate(1), std::domain_error);
}

TEST_CASE("noiseless success probability matches the closed form") {
  for (int n = 2; n <= 7; ++n) {
    const Circuit grover_gate = build_grover_gate(n);
    StateVector s(grover_gate.num_qubits(), 0);
    Circuit synth = build_uniform_superposition(n);
    synth.num_ancilla_qubits = grover_gate.num_ancilla_qubits;
    synth.apply_to(s);
    std::vector<int> data(n);
    std::vector<int> zeros(n, 0);
    for (int q = 0; q < n; ++q) data[q] = q;
    const int k_max = 2 * static_cast<int>(
        std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, n)) / 4.0));
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) grover_gate.apply_to(s);
      CHECK(std::abs(s.marginal_probability(data, zeros) -
                     testutil::closed_form_ps(n, k)) < 1e-9);
    }
  }
}

TEST_CASE("n=2 reaches certainty in one iteration") {
  const Circuit g = build_grover_gate(2);
  StateVector s(2, 0);
  build_uniform_superposition(2).apply_to(s);
  g.apply_to(s);
  CHECK(s.marginal_probability({0, 1}, {0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("n=4 three iterations") {
  const Circuit g = build_grover_gate(4);
  StateVector s(g.num_qubits(), 0);
  Circuit synth = build_uniform_superposition(4);
  synth.num_ancilla_qubits = g.num_ancilla_qubits;
  synth.apply_to(s);
  for (int k = 0; k < 3; ++k) g.apply_to(s);
  const double want = std::pow(std::sin(7 * std::asin(0.25)), 2);
  CHECK(s.marginal_probability({0, 1, 2, 3}, {0, 0, 0, 0}) ==
        doctest::Approx(want).epsilon(1e-9));
  CHECK(want == doctest::Approx(0.9613).epsilon(1e-3));
}

TEST_CASE("oracle flips only the searched basis state") {
  for (int n = 2; n <= 5; ++n) {
    const Circuit oracle = build_oracle(n);
    const std::uint64_t n_data = 1ull << n;
    for (std::uint64_t x = 0; x < n_data; ++x) {
      StateVector s(oracle.num_qubits(), x);
      oracle.apply_to(s);
      const double want = (x == 0) ? -1.0 : 1.0;
      CHECK(std::abs(s.amplitudes()[x] - cplx{want, 0.0}) < 1e-9);
    }
  }
}

TEST_CASE("ancillas restored after a full grover gate") {
  for (int n = 4; n <= 6; ++n) {
    const Circuit g = build_grover_gate(n);
    REQUIRE(g.num_ancilla_qubits == n - 3);
    StateVector s(g.num_qubits(), 0);
    Circuit synth = build_uniform_superposition(n);
    synth.num_ancilla_qubits = g.num_ancilla_qubits;
    synth.apply_to(s);
    g.apply_to(s);
    std::vector<int> anc(g.num_ancilla_qubits);
    std::vector<int> zeros(g.num_ancilla_qubits, 0);
    for (int i = 0; i < g.num_ancilla_qubits; ++i) anc[i] = n + i;
    CHECK(s.marginal_probability(anc, zeros) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("layer disjointness invariant") {
  for (int n = 2; n <= 7; ++n) CHECK_NOTHROW(build_grover_gate(n).check_invariants());
}

TEST_CASE("reference resource formulas") {
  const ResourceCounts f5 = paper_resource_formulas(5);
  CHECK(f5.toffoli == 6);
  CHECK(f5.hadamard == 15);
  CHECK(f5.x == 18);
  CHECK(f5.z == 2);
  CHECK(f5.time_steps == 16);
  CHECK(f5.ancillas == 2);
}

TEST_CASE("actual resource counts") {
  SUBCASE("n=2 uses CNOT only") {
    Circuit net = build_uniform_superposition(2);
    net.append(build_grover_gate(2));
    const ResourceCounts r = resource_counts(net);
    CHECK(r.cnot == 2);
    CHECK(r.toffoli == 0);
    CHECK(r.time_steps == paper_resource_formulas(2).time_steps);  // 2n+6 = 10
  }
  SUBCASE("n=3 toffoli count matches the formula") {
    Circuit net = build_uniform_superposition(3);
    net.append(build_grover_gate(3));
    CHECK(resource_counts(net).toffoli == 2);
    CHECK(paper_resource_formulas(3).toffoli == 2);
  }
  SUBCASE("one-qubit gate counts match the formulas for n=2..7") {
    for (int n = 2; n <= 7; ++n) {
      Circuit net = build_uniform_superposition(n);
      Circuit g = build_grover_gate(n);
      net.num_ancilla_qubits = g.num_ancilla_qubits;
      net.append(g);
      const ResourceCounts r = resource_counts(net);
      const ResourceCounts f = paper_resource_formulas(n);
      CHECK(r.hadamard == f.hadamard);
      CHECK(r.x == f.x);
      CHECK(r.z == f.z);
      CHECK(r.ancillas == f.ancillas);
    }
  }
  SUBCASE("compute-uncompute exceeds the reference toffoli count for n>=4") {
    Circuit g = build_grover_gate(5);
    CHECK(resource_counts(g).toffoli == 10);  // 2(2k-3), k = 4
    CHECK(paper_resource_formulas(5).toffoli == 6);
  }
}

TEST_CASE("schedule_layers packing") {
  SUBCASE("disjoint gates share a layer") {
    Circuit c = schedule_layers({make_h(0), make_h(1)}, 2, 0);
    CHECK(c.num_layers() == 1);
  }
  SUBCASE("same qubit serializes") {
    Circuit c = schedule_layers({make_h(0), make_x(0)}, 1, 0);
    CHECK(c.num_layers() == 2);
  }
  SUBCASE("independent gate packs into the first layer") {
    Circuit c = schedule_layers({make_h(0), make_cnot(0, 1), make_h(2)}, 3, 0);
    REQUIRE(c.num_layers() == 2);
    CHECK(c.layers[0].size() == 2);  // H(0) and H(2)
  }
}

TEST_CASE("circuit dump format") {
  Circuit c = schedule_layers({make_h(0), make_cnot(0, 1)}, 2, 0);
  const std::string dump = dump_gates(c);
  CHECK(dump == "0 H 0\n1 CNOT 0 1\n");
}
