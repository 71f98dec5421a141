#include "grover/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grover {

namespace {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::TOFFOLI: return "TOFFOLI";
  }
  return "?";
}

std::vector<int> gate_qubits(const Gate& g) {
  std::vector<int> qs{g.q0};
  if (g.arity() >= 2) qs.push_back(g.q1);
  if (g.arity() >= 3) qs.push_back(g.q2);
  return qs;
}

}  // namespace

std::vector<Gate> Circuit::flat_gates() const {
  std::vector<Gate> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

void Circuit::apply_to(StateVector& state) const {
  if (state.num_qubits() != num_qubits())
    throw std::domain_error("Circuit::apply_to: register size mismatch");
  for (const auto& layer : layers)
    for (const Gate& g : layer) state.apply_gate(g);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits() != num_qubits())
    throw std::domain_error("Circuit::append: register size mismatch");
  layers.insert(layers.end(), other.layers.begin(), other.layers.end());
  labels.insert(labels.end(), other.labels.begin(), other.labels.end());
}

void Circuit::check_invariants() const {
  for (const auto& layer : layers) {
    std::vector<bool> used(num_qubits(), false);
    for (const Gate& g : layer) {
      for (int q : gate_qubits(g)) {
        if (q < 0 || q >= num_qubits())
          throw std::domain_error("Circuit: gate index out of range");
        if (used[q]) throw std::domain_error("Circuit: qubit reused within a layer");
        used[q] = true;
      }
    }
  }
}

ResourceCounts paper_resource_formulas(int n) {
  ResourceCounts r;
  r.toffoli = n >= 3 ? 2L * (n - 2) : 0;
  r.cnot = n == 2 ? 2 : 0;
  r.hadamard = 3L * n;
  r.x = 2L * (2 * n - 1);
  r.z = 2;
  r.time_steps = 2L * n + 6;
  r.ancillas = std::max(0, n - 3);
  return r;
}

ResourceCounts resource_counts(const Circuit& circuit) {
  ResourceCounts r;
  r.time_steps = circuit.num_layers();
  r.ancillas = circuit.num_ancilla_qubits;
  for (const Gate& g : circuit.flat_gates()) {
    switch (g.kind) {
      case GateKind::H: ++r.hadamard; break;
      case GateKind::X: ++r.x; break;
      case GateKind::Y: ++r.y; break;
      case GateKind::Z: ++r.z; break;
      case GateKind::CNOT: ++r.cnot; break;
      case GateKind::CZ: ++r.cz; break;
      case GateKind::TOFFOLI: ++r.toffoli; break;
    }
  }
  return r;
}

Circuit build_uniform_superposition(int n) {
  if (n < 1) throw std::domain_error("build_uniform_superposition: n must be >= 1");
  Circuit c;
  c.num_data_qubits = n;
  c.layers.emplace_back();
  for (int q = 0; q < n; ++q) c.layers.back().push_back(make_h(q));
  c.labels.emplace_back("synthesis");
  return c;
}

std::vector<Gate> decompose_cnx(const std::vector<int>& controls, int target,
                                const std::vector<int>& ancillas) {
  const int k = static_cast<int>(controls.size());
  if (k < 2) throw std::domain_error("decompose_cnx: need at least two controls");
  if (k == 2) return {make_toffoli(controls[0], controls[1], target)};
  if (static_cast<int>(ancillas.size()) < k - 2)
    throw std::domain_error("decompose_cnx: need k-2 ancillas");

  std::vector<Gate> compute;
  compute.push_back(make_toffoli(controls[0], controls[1], ancillas[0]));
  for (int j = 2; j < k - 1; ++j)
    compute.push_back(make_toffoli(controls[j], ancillas[j - 2], ancillas[j - 1]));

  std::vector<Gate> seq = compute;
  seq.push_back(make_toffoli(controls[k - 1], ancillas[k - 3], target));
  seq.insert(seq.end(), compute.rbegin(), compute.rend());
  return seq;
}

int grover_ancilla_count(int n) {
  // The C^{n-1}(X) cascade needs (n-1)-2 work qubits for n >= 4.
  return std::max(0, n - 3);
}

namespace {

std::vector<Gate> controlled_x_cascade(int n) {
  const int num_anc = grover_ancilla_count(n);
  const int target = n - 1;
  if (n == 2) return {make_cnot(0, 1)};
  std::vector<int> controls(n - 1);
  for (int q = 0; q < n - 1; ++q) controls[q] = q;
  std::vector<int> ancillas(num_anc);
  for (int a = 0; a < num_anc; ++a) ancillas[a] = n + a;
  return decompose_cnx(controls, target, ancillas);
}

// Phase flip on |0...0>: X-conjugated generalized controlled-Z with the
// target's Hadamard conjugation.
std::vector<Gate> oracle_gates(int n) {
  const std::vector<Gate> cnx = controlled_x_cascade(n);
  std::vector<Gate> gates;
  for (int q = 0; q < n; ++q) gates.push_back(make_x(q));
  gates.push_back(make_h(n - 1));
  gates.insert(gates.end(), cnx.begin(), cnx.end());
  gates.push_back(make_h(n - 1));
  for (int q = 0; q < n; ++q) gates.push_back(make_x(q));
  return gates;
}

}  // namespace

Circuit build_oracle(int n) {
  if (n < 2) throw std::domain_error("build_oracle: n must be >= 2");
  Circuit c = schedule_layers(oracle_gates(n), n, grover_ancilla_count(n));
  c.labels.assign(c.layers.size(), "oracle");
  return c;
}

Circuit build_grover_gate(int n) {
  if (n < 2) throw std::domain_error("build_grover_gate: n must be >= 2");
  const int num_anc = grover_ancilla_count(n);
  const int target = n - 1;
  const std::vector<Gate> cnx = controlled_x_cascade(n);

  std::vector<Gate> gates = oracle_gates(n);
  const std::size_t oracle_end = gates.size();

  // Inversion about the mean. On the target thread the adjacent
  // H X H sandwiches collapse to Z, which reproduces the reference
  // network's two Z gates and its 1-qubit gate totals.
  for (int q = 0; q < n - 1; ++q) gates.push_back(make_h(q));
  for (int q = 0; q < n - 1; ++q) gates.push_back(make_x(q));
  gates.push_back(make_z(target));
  gates.insert(gates.end(), cnx.begin(), cnx.end());
  gates.push_back(make_z(target));
  for (int q = 0; q < n - 1; ++q) gates.push_back(make_x(q));
  for (int q = 0; q < n - 1; ++q) gates.push_back(make_h(q));

  Circuit c = schedule_layers(gates, n, num_anc);
  // Label each layer by where its first gate came from.
  std::size_t seen = 0;
  c.labels.clear();
  for (const auto& layer : c.layers) {
    c.labels.push_back(seen < oracle_end ? "oracle" : "inversion");
    seen += layer.size();
  }
  return c;
}

Circuit schedule_layers(const std::vector<Gate>& gates, int num_data, int num_ancilla) {
  Circuit c;
  c.num_data_qubits = num_data;
  c.num_ancilla_qubits = num_ancilla;
  std::vector<int> next_free(num_data + num_ancilla, 0);
  for (const Gate& g : gates) {
    int layer = 0;
    for (int q : gate_qubits(g)) {
      if (q < 0 || q >= c.num_qubits())
        throw std::domain_error("schedule_layers: gate index out of range");
      layer = std::max(layer, next_free[q]);
    }
    if (layer >= c.num_layers()) c.layers.resize(layer + 1);
    c.layers[layer].push_back(g);
    for (int q : gate_qubits(g)) next_free[q] = layer + 1;
  }
  c.labels.assign(c.layers.size(), "");
  c.check_invariants();
  return c;
}

std::string pretty_print(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits: " << circuit.num_data_qubits << " data + "
     << circuit.num_ancilla_qubits << " ancilla\n";
  for (int l = 0; l < circuit.num_layers(); ++l) {
    os << "L" << l;
    if (l < static_cast<int>(circuit.labels.size()) && !circuit.labels[l].empty())
      os << " [" << circuit.labels[l] << "]";
    os << ":";
    for (const Gate& g : circuit.layers[l]) {
      os << " " << kind_name(g.kind) << "(";
      os << g.q0;
      if (g.arity() >= 2) os << "," << g.q1;
      if (g.arity() >= 3) os << "," << g.q2;
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string dump_gates(const Circuit& circuit) {
  std::ostringstream os;
  for (int l = 0; l < circuit.num_layers(); ++l) {
    for (const Gate& g : circuit.layers[l]) {
      os << l << " " << kind_name(g.kind) << " " << g.q0;
      if (g.arity() >= 2) os << " " << g.q1;
      if (g.arity() >= 3) os << " " << g.q2;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace grover
