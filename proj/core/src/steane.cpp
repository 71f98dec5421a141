#include "grover/steane.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "grover/parallel.hpp"

namespace grover {

namespace {

int parity(int x) { return std::popcount(static_cast<unsigned>(x)) & 1; }

}  // namespace

CodeTables CodeTables::standard() {
  CodeTables t;
  // Hamming parity check with columns 1..7 in binary; row i collects the
  // positions whose (1-based) column number has bit i set.
  t.h_rows_ = {0b1010101, 0b1100110, 0b1111000};

  for (int w = 0; w < 128; ++w) {
    int s = 0;
    for (int i = 0; i < 3; ++i) s |= parity(w & t.h_rows_[i]) << i;
    if (s == 0) {
      t.is_code_[w] = true;
      t.code_.push_back(w);
    }
  }
  // C_perp is spanned by the parity-check rows themselves.
  for (int bits = 0; bits < 8; ++bits) {
    int w = 0;
    for (int i = 0; i < 3; ++i)
      if (bits & (1 << i)) w ^= t.h_rows_[i];
    if (!t.is_dual_[w]) {
      t.is_dual_[w] = true;
      t.dual_.push_back(w);
    }
  }
  if (t.code_.size() != 16 || t.dual_.size() != 8)
    throw std::logic_error("CodeTables: wrong code sizes");
  for (int w : t.dual_)
    if (!t.is_code_[w]) throw std::logic_error("CodeTables: C_perp not inside C");

  auto min_weight = [](const std::vector<int>& words) {
    int d = 7;
    for (int w : words)
      if (w != 0) d = std::min(d, std::popcount(static_cast<unsigned>(w)));
    return d;
  };
  t.d_code_ = min_weight(t.code_);
  t.d_dual_ = min_weight(t.dual_);
  return t;
}

int CodeTables::syndrome(int word) const {
  int s = 0;
  for (int i = 0; i < 3; ++i) s |= parity(word & h_rows_[i]) << i;
  return s;
}

bool CodeTables::in_code(int word) const { return is_code_[word & 127]; }
bool CodeTables::in_dual(int word) const { return is_dual_[word & 127]; }

DecodeResult classical_decode(int word, const CodeTables& tables) {
  DecodeResult r;
  r.corrected_word = word & 127;
  const int s = tables.syndrome(r.corrected_word);
  if (s != 0) {
    r.corrected_word ^= 1 << (s - 1);  // syndrome encodes the flipped position
    r.detected = true;
  }
  if (!tables.in_code(r.corrected_word)) {
    r.failure = true;
    return r;
  }
  r.logical = tables.in_dual(r.corrected_word) ? 0 : 1;
  return r;
}

StateVector logical_zero_ideal(const CodeTables& tables) {
  StateVector s(7, 0);
  auto& amp = s.amplitudes();
  amp[0] = 0.0;
  const double a = 1.0 / std::sqrt(8.0);
  for (int w : tables.dual_codewords()) amp[w] = a;
  return s;
}

StateVector logical_one_ideal(const CodeTables& tables) {
  StateVector s(7, 0);
  auto& amp = s.amplitudes();
  amp[0] = 0.0;
  const double a = 1.0 / std::sqrt(8.0);
  for (int w : tables.dual_codewords()) amp[w ^ 127] = a;
  return s;
}

WeightEquivalenceReport weight_equivalence_check(const CodeTables& tables) {
  WeightEquivalenceReport rep;
  const StateVector zero = logical_zero_ideal(tables);
  const StateVector one = logical_one_ideal(tables);

  auto states_equal = [](const StateVector& a, const StateVector& b) {
    for (std::uint64_t i = 0; i < a.dim(); ++i)
      if (std::abs(a.amplitudes()[i] - b.amplitudes()[i]) > 1e-12) return false;
    return true;
  };
  auto flipped = [](const StateVector& s, int v) {
    StateVector out = s;
    PauliWord w;
    for (int q = 0; q < 7; ++q)
      if (v & (1 << q)) w.add(q, Pauli::X);
    out.apply_pauli_word(w);
    return out;
  };

  for (int v = 1; v < 128; ++v) {
    if (std::popcount(static_cast<unsigned>(v)) != 2) continue;
    const StateVector lhs = flipped(zero, v);
    int partner = -1;
    for (int u = 0; u < 7; ++u) {
      if (states_equal(lhs, flipped(one, 1 << u))) {
        partner = 1 << u;
        break;
      }
    }
    if (partner < 0) {
      rep.ok = false;
      rep.counterexample = v;
      return rep;
    }
    rep.pairs.emplace_back(v, partner);
  }
  // Inverse direction: every weight-1 u on |1_E> matches some weight-2 v.
  for (int u = 0; u < 7; ++u) {
    const StateVector rhs = flipped(one, 1 << u);
    bool found = false;
    for (const auto& [v, pu] : rep.pairs)
      if (pu == (1 << u) && states_equal(rhs, flipped(zero, v))) {
        found = true;
        break;
      }
    if (!found) {
      rep.ok = false;
      rep.counterexample = -(1 << u);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

Circuit build_zero_synthesis_network(const CodeTables& tables) {
  // Pilot qubit per generator row: a position used by no other row.
  const auto& rows = tables.dual_generator_rows();
  std::vector<Gate> gates;
  std::vector<int> pilots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int others = 0;
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
      if (r2 != r) others |= rows[r2];
    int pilot = -1;
    for (int q = 0; q < 7; ++q)
      if ((rows[r] & (1 << q)) && !(others & (1 << q))) {
        pilot = q;
        break;
      }
    if (pilot < 0) throw std::logic_error("synthesis: no pilot column");
    pilots.push_back(pilot);
    gates.push_back(make_h(pilot));
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int q = 0; q < 7; ++q)
      if ((rows[r] & (1 << q)) && q != pilots[r])
        gates.push_back(make_cnot(pilots[r], q));
  return schedule_layers(gates, 7, 0);
}

std::vector<Gate> transversal_gate(GateKind kind, const std::vector<int>& block_starts) {
  std::vector<Gate> gates;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      if (block_starts.size() != 1)
        throw std::domain_error("transversal_gate: 1-qubit kind takes one block");
      for (int i = 0; i < 7; ++i) gates.push_back(Gate{kind, block_starts[0] + i});
      return gates;
    case GateKind::CNOT:
    case GateKind::CZ: {
      if (block_starts.size() != 2 || std::abs(block_starts[0] - block_starts[1]) < 7)
        throw std::domain_error("transversal_gate: need two disjoint blocks");
      for (int i = 0; i < 7; ++i)
        gates.push_back(Gate{kind, block_starts[0] + i, block_starts[1] + i});
      return gates;
    }
    case GateKind::TOFFOLI:
      throw std::domain_error("transversal_gate: Toffoli is not transversal here");
  }
  return gates;
}

namespace {

// Data block on qubits 0..6, check block on 7..13, prepared in parallel
// and connected by the transversal CNOT (data controls).
Circuit build_ft_prep_circuit(const CodeTables& tables) {
  const Circuit synth = build_zero_synthesis_network(tables);
  std::vector<Gate> gates;
  for (const Gate& g : synth.flat_gates()) gates.push_back(g);
  for (const Gate& g : synth.flat_gates()) {
    Gate shifted = g;
    shifted.q0 += 7;
    if (shifted.arity() >= 2) shifted.q1 += 7;
    gates.push_back(shifted);
  }
  for (const Gate& g : transversal_gate(GateKind::CNOT, {0, 7})) gates.push_back(g);
  return schedule_layers(gates, 14, 0);
}

const Circuit& ft_prep_circuit() {
  static const Circuit c = build_ft_prep_circuit(CodeTables::standard());
  return c;
}

// Logical two-qubit Grover iteration with the |00> oracle, every logical
// gate transversal (blocks at 0 and 7). Mirrors the bare n=2 network
// with the controlled-Z done qubit-wise.
const Circuit& encoded_grover_circuit() {
  static const Circuit c = [] {
    std::vector<Gate> gates;
    auto both_1q = [&](GateKind k) {
      for (const Gate& g : transversal_gate(k, {0})) gates.push_back(g);
      for (const Gate& g : transversal_gate(k, {7})) gates.push_back(g);
    };
    // Oracle: phase flip on logical |00>.
    both_1q(GateKind::X);
    for (const Gate& g : transversal_gate(GateKind::CZ, {0, 7})) gates.push_back(g);
    both_1q(GateKind::X);
    // Inversion about the mean.
    both_1q(GateKind::H);
    both_1q(GateKind::X);
    for (const Gate& g : transversal_gate(GateKind::CZ, {0, 7})) gates.push_back(g);
    both_1q(GateKind::X);
    both_1q(GateKind::H);
    return schedule_layers(gates, 14, 0);
  }();
  return c;
}

const Circuit& encoded_hadamard_circuit() {
  static const Circuit c = [] {
    std::vector<Gate> gates;
    for (const Gate& g : transversal_gate(GateKind::H, {0})) gates.push_back(g);
    for (const Gate& g : transversal_gate(GateKind::H, {7})) gates.push_back(g);
    return schedule_layers(gates, 14, 0);
  }();
  return c;
}

}  // namespace

PrepResult prepare_zero_ft(const CodeTables& tables, const NoiseParams& params,
                           RandomStream& rng, int max_restarts, MemoryMode mode) {
  if (max_restarts < 1) throw std::domain_error("prepare_zero_ft: max_restarts >= 1");
  const Circuit& prep = ft_prep_circuit();

  std::vector<int> check_qubits(7);
  for (int i = 0; i < 7; ++i) check_qubits[i] = 7 + i;
  std::vector<int> all14(14), data7(7);
  for (int i = 0; i < 14; ++i) all14[i] = i;
  for (int i = 0; i < 7; ++i) data7[i] = i;

  PrepResult res;
  for (int attempt = 1; attempt <= max_restarts; ++attempt) {
    res.attempts = attempt;
    StateVector ws(14, 0);
    apply_noisy(prep, params, rng, ws, mode);

    // The verification measurement is a gate location: gamma-strength
    // depolarizing on each measured qubit, plus the step's memory word.
    for (int q : check_qubits) {
      const PauliWord err = sample_gate_error(make_x(q), params.gamma, rng);
      if (!err.trivial()) ws.apply_pauli_word(err);
    }
    const PauliWord mem = sample_memory_word(
        mode == MemoryMode::Additive ? all14 : data7, params.epsilon, rng);
    if (!mem.trivial()) ws.apply_pauli_word(mem);

    const std::vector<int> bits = ws.measure_qubits(check_qubits, rng);
    int w = 0;
    for (int i = 0; i < 7; ++i)
      if (bits[i]) w |= 1 << i;
    // Accept only a clean C_perp word: zero syndrome and trivial coset.
    if (!tables.in_dual(w)) continue;

    res.ok = true;
    res.state = ws.extract_conditional(check_qubits, bits);
    return res;
  }
  res.ok = false;
  return res;
}

PrepErrorEstimate estimate_prep_logical_error(const NoiseParams& params,
                                              const McConfig& cfg, int max_restarts) {
  const CodeTables tables = CodeTables::standard();

  std::array<bool, 128> bad{};
  for (int w = 0; w < 128; ++w) {
    const DecodeResult d = classical_decode(w, tables);
    bad[w] = d.failure || d.logical != 0;
  }

  const long n_chunks = (cfg.n_trajectories + kTrajectoryChunk - 1) / kTrajectoryChunk;
  struct ChunkSum {
    double err_sum = 0.0, err_sq = 0.0;
    long accepted = 0, attempts = 0;
  };
  std::vector<ChunkSum> sums(n_chunks);

  parallel_chunks(cfg.n_trajectories, kTrajectoryChunk, cfg.workers,
                  [&](long chunk, long begin, long end) {
                    ChunkSum& s = sums[chunk];
                    for (long traj = begin; traj < end; ++traj) {
                      RandomStream rng(cfg.master_seed,
                                       static_cast<std::uint64_t>(traj));
                      const PrepResult prep =
                          prepare_zero_ft(tables, params, rng, max_restarts, cfg.mode);
                      s.attempts += prep.attempts;
                      if (!prep.ok) continue;
                      double p_err = 0.0;
                      const auto& amp = prep.state.amplitudes();
                      for (int w = 0; w < 128; ++w)
                        if (bad[w]) p_err += std::norm(amp[w]);
                      s.err_sum += p_err;
                      s.err_sq += p_err * p_err;
                      ++s.accepted;
                    }
                  });

  PrepErrorEstimate est;
  est.n_trajectories = cfg.n_trajectories;
  double err_sum = 0.0, err_sq = 0.0;
  long attempts = 0;
  for (const ChunkSum& s : sums) {
    err_sum += s.err_sum;
    err_sq += s.err_sq;
    est.accepted += s.accepted;
    attempts += s.attempts;
  }
  est.mean_attempts = static_cast<double>(attempts) / cfg.n_trajectories;
  if (est.accepted > 0) {
    est.rate = err_sum / est.accepted;
    if (est.accepted > 1) {
      const double var = std::max(
          0.0, (err_sq - err_sum * err_sum / est.accepted) / (est.accepted - 1));
      est.stderr_ = std::sqrt(var / est.accepted);
    }
  }
  return est;
}

EncodedExperimentResult run_encoded_experiment(double epsilon, double C_ratio,
                                               const McConfig& cfg, int max_restarts) {
  const NoiseParams params = NoiseParams::from_ratio(epsilon, C_ratio);
  const CodeTables tables = CodeTables::standard();

  std::array<bool, 128> good{};
  for (int w = 0; w < 128; ++w) {
    const DecodeResult d = classical_decode(w, tables);
    good[w] = !d.failure && d.logical == 0;
  }

  const Circuit bare_grover = build_grover_gate(2);
  const Circuit bare_synth = build_uniform_superposition(2);
  const Circuit& enc_h = encoded_hadamard_circuit();
  const Circuit& enc_grover = encoded_grover_circuit();

  const long n_chunks = (cfg.n_trajectories + kTrajectoryChunk - 1) / kTrajectoryChunk;
  struct ChunkSum {
    double enc_sum = 0.0, enc_sq = 0.0;
    double bare_sum = 0.0, bare_sq = 0.0;
    long attempts = 0, failures = 0;
  };
  std::vector<ChunkSum> sums(n_chunks);

  parallel_chunks(
      cfg.n_trajectories, kTrajectoryChunk, cfg.workers,
      [&](long chunk, long begin, long end) {
        ChunkSum& s = sums[chunk];
        for (long traj = begin; traj < end; ++traj) {
          RandomStream rng(cfg.master_seed, static_cast<std::uint64_t>(traj));

          double p_enc = 0.0;
          const PrepResult a = prepare_zero_ft(tables, params, rng, max_restarts, cfg.mode);
          const PrepResult b = prepare_zero_ft(tables, params, rng, max_restarts, cfg.mode);
          s.attempts += a.attempts + b.attempts;
          if (!a.ok || !b.ok) {
            ++s.failures;  // restarts exhausted counts as an unsuccessful run
          } else {
            StateVector psi = StateVector::tensor(a.state, b.state);
            apply_noisy(enc_h, params, rng, psi, cfg.mode);
            apply_noisy(enc_grover, params, rng, psi, cfg.mode);
            const auto& amp = psi.amplitudes();
            for (std::uint64_t i = 0; i < psi.dim(); ++i)
              if (good[i & 127] && good[i >> 7]) p_enc += std::norm(amp[i]);
          }
          s.enc_sum += p_enc;
          s.enc_sq += p_enc * p_enc;

          StateVector bare(2, 0);
          apply_noisy(bare_synth, params, rng, bare, cfg.mode);
          apply_noisy(bare_grover, params, rng, bare, cfg.mode);
          const double p_bare = std::norm(bare.amplitudes()[0]);
          s.bare_sum += p_bare;
          s.bare_sq += p_bare * p_bare;
        }
      });

  EncodedExperimentResult r;
  r.epsilon = params.epsilon;
  r.gamma = params.gamma;
  r.C = C_ratio;
  r.n_trajectories = cfg.n_trajectories;
  r.master_seed = cfg.master_seed;
  double es = 0, eq = 0, bs = 0, bq = 0;
  long attempts = 0;
  for (const ChunkSum& s : sums) {
    es += s.enc_sum;
    eq += s.enc_sq;
    bs += s.bare_sum;
    bq += s.bare_sq;
    attempts += s.attempts;
    r.prep_failures += s.failures;
  }
  const long n = cfg.n_trajectories;
  auto stderr_of = [n](double sum, double sq) {
    if (n < 2) return 0.0;
    const double var = std::max(0.0, (sq - sum * sum / n) / (n - 1));
    return std::sqrt(var / n);
  };
  r.encoded_ps = es / n;
  r.encoded_stderr = stderr_of(es, eq);
  r.bare_ps = bs / n;
  r.bare_stderr = stderr_of(bs, bq);
  r.mean_attempts = static_cast<double>(attempts) / (2.0 * n);
  return r;
}

}  // namespace grover
