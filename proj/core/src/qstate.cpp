#include "grover/qstate.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace grover {

namespace {
constexpr cplx kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

int Gate::arity() const {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return 1;
    case GateKind::CNOT:
    case GateKind::CZ:
      return 2;
    case GateKind::TOFFOLI:
      return 3;
  }
  return 0;
}

Gate make_h(int q) { return Gate{GateKind::H, q}; }
Gate make_x(int q) { return Gate{GateKind::X, q}; }
Gate make_y(int q) { return Gate{GateKind::Y, q}; }
Gate make_z(int q) { return Gate{GateKind::Z, q}; }
Gate make_cnot(int control, int target) { return Gate{GateKind::CNOT, control, target}; }
Gate make_cz(int a, int b) { return Gate{GateKind::CZ, a, b}; }
Gate make_toffoli(int c1, int c2, int target) { return Gate{GateKind::TOFFOLI, c1, c2, target}; }

StateVector::StateVector(int m, std::uint64_t index) : num_qubits_(m) {
  if (m < 1) throw std::domain_error("StateVector: need at least one qubit");
  if (index >= (std::uint64_t{1} << m))
    throw std::domain_error("StateVector: basis index out of range");
  amp_.assign(std::uint64_t{1} << m, cplx{0.0, 0.0});
  amp_[index] = 1.0;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) throw std::domain_error("qubit index out of range");
}

void StateVector::apply_1q(int q, const cplx m00, const cplx m01, const cplx m10,
                           const cplx m11) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const std::uint64_t n = dim();
  for (std::uint64_t base = 0; base < n; base += 2 * bit) {
    for (std::uint64_t off = 0; off < bit; ++off) {
      const std::uint64_t i0 = base + off;
      const std::uint64_t i1 = i0 + bit;
      const cplx a0 = amp_[i0];
      const cplx a1 = amp_[i1];
      amp_[i0] = m00 * a0 + m01 * a1;
      amp_[i1] = m10 * a0 + m11 * a1;
    }
  }
}

void StateVector::apply_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      check_qubit(g.q0);
      apply_1q(g.q0, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
      return;
    case GateKind::X: {
      check_qubit(g.q0);
      const std::uint64_t bit = std::uint64_t{1} << g.q0;
      for (std::uint64_t i = 0; i < dim(); ++i)
        if (!(i & bit)) std::swap(amp_[i], amp_[i | bit]);
      return;
    }
    case GateKind::Y:
      check_qubit(g.q0);
      apply_1q(g.q0, 0.0, -kI, kI, 0.0);
      return;
    case GateKind::Z: {
      check_qubit(g.q0);
      const std::uint64_t bit = std::uint64_t{1} << g.q0;
      for (std::uint64_t i = 0; i < dim(); ++i)
        if (i & bit) amp_[i] = -amp_[i];
      return;
    }
    case GateKind::CNOT: {
      check_qubit(g.q0);
      check_qubit(g.q1);
      if (g.q0 == g.q1) throw std::domain_error("CNOT: repeated qubit index");
      const std::uint64_t c = std::uint64_t{1} << g.q0;
      const std::uint64_t t = std::uint64_t{1} << g.q1;
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & c) && !(i & t)) std::swap(amp_[i], amp_[i | t]);
      return;
    }
    case GateKind::CZ: {
      check_qubit(g.q0);
      check_qubit(g.q1);
      if (g.q0 == g.q1) throw std::domain_error("CZ: repeated qubit index");
      const std::uint64_t mask = (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & mask) == mask) amp_[i] = -amp_[i];
      return;
    }
    case GateKind::TOFFOLI: {
      check_qubit(g.q0);
      check_qubit(g.q1);
      check_qubit(g.q2);
      if (g.q0 == g.q1 || g.q0 == g.q2 || g.q1 == g.q2)
        throw std::domain_error("Toffoli: repeated qubit index");
      const std::uint64_t c =
          (std::uint64_t{1} << g.q0) | (std::uint64_t{1} << g.q1);
      const std::uint64_t t = std::uint64_t{1} << g.q2;
      for (std::uint64_t i = 0; i < dim(); ++i)
        if ((i & c) == c && !(i & t)) std::swap(amp_[i], amp_[i | t]);
      return;
    }
  }
}

void StateVector::apply_pauli_word(const PauliWord& w) {
  if (w.trivial()) return;
  std::uint64_t xmask = 0;
  std::uint64_t zmask = 0;
  int y_count = 0;
  for (const auto& [q, p] : w.terms) {
    check_qubit(q);
    switch (p) {
      case Pauli::I:
        break;
      case Pauli::X:
        xmask |= std::uint64_t{1} << q;
        break;
      case Pauli::Y:
        xmask |= std::uint64_t{1} << q;
        zmask |= std::uint64_t{1} << q;
        ++y_count;
        break;
      case Pauli::Z:
        zmask |= std::uint64_t{1} << q;
        break;
    }
  }
  // Y = [[0,-i],[i,0]] contributes a factor i per Y letter on top of the
  // X/Z masks: Y|b> = i(-1)^b |1-b>.
  cplx y_phase{1.0, 0.0};
  for (int k = 0; k < (y_count & 3); ++k) y_phase *= kI;

  std::vector<cplx> out(dim());
  for (std::uint64_t i = 0; i < dim(); ++i) {
    const int sign = std::popcount(i & zmask) & 1 ? -1 : 1;
    out[i ^ xmask] = y_phase * static_cast<double>(sign) * amp_[i];
  }
  amp_ = std::move(out);
}

double StateVector::marginal_probability(const std::vector<int>& subset,
                                         const std::vector<int>& outcome_bits) const {
  if (subset.size() != outcome_bits.size())
    throw std::domain_error("marginal_probability: subset/outcome length mismatch");
  std::uint64_t mask = 0;
  std::uint64_t target = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    check_qubit(subset[k]);
    const std::uint64_t bit = std::uint64_t{1} << subset[k];
    if (mask & bit) throw std::domain_error("marginal_probability: repeated qubit");
    mask |= bit;
    if (outcome_bits[k]) target |= bit;
  }
  double p = 0.0;
  for (std::uint64_t i = 0; i < dim(); ++i)
    if ((i & mask) == target) p += std::norm(amp_[i]);
  return p;
}

std::vector<int> StateVector::measure_qubits(const std::vector<int>& subset,
                                             RandomStream& rng) {
  std::uint64_t mask = 0;
  for (int q : subset) {
    check_qubit(q);
    mask |= std::uint64_t{1} << q;
  }
  const std::size_t n_out = std::size_t{1} << subset.size();
  std::vector<double> probs(n_out, 0.0);
  for (std::uint64_t i = 0; i < dim(); ++i) {
    std::uint64_t key = 0;
    for (std::size_t k = 0; k < subset.size(); ++k)
      if (i & (std::uint64_t{1} << subset[k])) key |= std::uint64_t{1} << k;
    probs[key] += std::norm(amp_[i]);
  }
  const double u = rng.uniform();
  double acc = 0.0;
  std::size_t chosen = n_out - 1;
  for (std::size_t k = 0; k < n_out; ++k) {
    acc += probs[k];
    if (u < acc) {
      chosen = k;
      break;
    }
  }
  if (probs[chosen] <= 0.0)
    throw std::runtime_error("measure_qubits: selected zero-probability branch");

  std::uint64_t target = 0;
  for (std::size_t k = 0; k < subset.size(); ++k)
    if (chosen & (std::uint64_t{1} << k)) target |= std::uint64_t{1} << subset[k];
  const double scale = 1.0 / std::sqrt(probs[chosen]);
  for (std::uint64_t i = 0; i < dim(); ++i)
    amp_[i] = (i & mask) == target ? amp_[i] * scale : cplx{0.0, 0.0};

  std::vector<int> bits(subset.size());
  for (std::size_t k = 0; k < subset.size(); ++k)
    bits[k] = (chosen >> k) & 1 ? 1 : 0;
  return bits;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n <= 0.0) throw std::runtime_error("normalize: zero state");
  for (cplx& a : amp_) a /= n;
}

StateVector StateVector::extract_conditional(const std::vector<int>& subset,
                                             const std::vector<int>& outcome_bits) const {
  if (subset.size() != outcome_bits.size())
    throw std::domain_error("extract_conditional: length mismatch");
  std::uint64_t mask = 0;
  std::uint64_t target = 0;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    check_qubit(subset[k]);
    mask |= std::uint64_t{1} << subset[k];
    if (outcome_bits[k]) target |= std::uint64_t{1} << subset[k];
  }
  const int m_rest = num_qubits_ - static_cast<int>(subset.size());
  StateVector out(m_rest, 0);
  out.amp_.assign(out.dim(), cplx{0.0, 0.0});
  for (std::uint64_t i = 0; i < dim(); ++i) {
    if ((i & mask) != target) continue;
    // Compact the remaining qubit bits, preserving their relative order.
    std::uint64_t j = 0;
    int shift = 0;
    for (int q = 0; q < num_qubits_; ++q) {
      if (mask & (std::uint64_t{1} << q)) continue;
      if (i & (std::uint64_t{1} << q)) j |= std::uint64_t{1} << shift;
      ++shift;
    }
    out.amp_[j] = amp_[i];
  }
  out.normalize();
  return out;
}

StateVector StateVector::tensor(const StateVector& low, const StateVector& high) {
  StateVector out(low.num_qubits() + high.num_qubits(), 0);
  out.amp_.assign(out.dim(), cplx{0.0, 0.0});
  for (std::uint64_t h = 0; h < high.dim(); ++h)
    for (std::uint64_t l = 0; l < low.dim(); ++l)
      out.amp_[(h << low.num_qubits()) | l] = high.amp_[h] * low.amp_[l];
  return out;
}

}  // namespace grover
