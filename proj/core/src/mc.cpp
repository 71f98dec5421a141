#include "grover/mc.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "grover/parallel.hpp"

namespace grover {

namespace {

// The initial-state synthesis is part of the network: one layer of
// Hadamards over the data register, running on the full register so the
// ancillas pick up memory errors from the start.
Circuit synthesis_on_register(int n, int num_ancilla) {
  Circuit c = build_uniform_superposition(n);
  c.num_ancilla_qubits = num_ancilla;
  return c;
}

struct MeanAcc {
  double sum = 0.0;
  double sum_sq = 0.0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  void merge(const MeanAcc& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean(long n) const { return sum / n; }
  double stderr_of_mean(long n) const {
    if (n < 2) return 0.0;
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1));
    return std::sqrt(var / n);
  }
};

}  // namespace

long required_trajectories(const NoiseParams& params, long n_floor) {
  if (params.noiseless()) return n_floor;
  double rate = 0.0;
  if (params.epsilon > 0.0) rate = std::max(rate, 1.0 / params.epsilon);
  if (params.gamma > 0.0) rate = std::max(rate, 1.0 / params.gamma);
  const long rule = static_cast<long>(std::ceil(10.0 * rate));
  return std::max(n_floor, rule);
}

SuccessCurve estimate_success_curve(int n, const NoiseParams& params, int T,
                                    const McConfig& cfg) {
  if (T < 1) throw std::domain_error("estimate_success_curve: T must be >= 1");
  if (cfg.n_trajectories < 1)
    throw std::domain_error("estimate_success_curve: need trajectories");

  const Circuit grover = build_grover_gate(n);
  const Circuit synth = synthesis_on_register(n, grover.num_ancilla_qubits);
  const int m = grover.num_qubits();

  std::vector<int> data_qubits(n);
  std::vector<int> zeros(n, 0);
  for (int q = 0; q < n; ++q) data_qubits[q] = q;

  const long n_chunks =
      (cfg.n_trajectories + kTrajectoryChunk - 1) / kTrajectoryChunk;
  std::vector<std::vector<MeanAcc>> chunk_acc(n_chunks,
                                              std::vector<MeanAcc>(T + 1));

  parallel_chunks(cfg.n_trajectories, kTrajectoryChunk, cfg.workers,
                  [&](long chunk, long begin, long end) {
                    auto& acc = chunk_acc[chunk];
                    for (long traj = begin; traj < end; ++traj) {
                      RandomStream rng(cfg.master_seed,
                                       static_cast<std::uint64_t>(traj));
                      StateVector state(m, 0);
                      apply_noisy(synth, params, rng, state, cfg.mode);
                      acc[0].add(state.marginal_probability(data_qubits, zeros));
                      for (int t = 1; t <= T; ++t) {
                        apply_noisy(grover, params, rng, state, cfg.mode);
                        acc[t].add(
                            state.marginal_probability(data_qubits, zeros));
                      }
                    }
                  });

  SuccessCurve out;
  out.n = n;
  out.params = params;
  out.n_trajectories = cfg.n_trajectories;
  out.master_seed = cfg.master_seed;
  out.p_success.resize(T + 1);
  out.std_err.resize(T + 1);
  for (int t = 0; t <= T; ++t) {
    MeanAcc total;
    for (long c = 0; c < n_chunks; ++c) total.merge(chunk_acc[c][t]);
    out.p_success[t] = total.mean(cfg.n_trajectories);
    out.std_err[t] = total.stderr_of_mean(cfg.n_trajectories);
  }
  return out;
}

std::vector<WeightHistogram> coefficient_histogram(int n, const NoiseParams& params,
                                                   const std::vector<int>& t_values,
                                                   const McConfig& cfg) {
  if (t_values.empty())
    throw std::domain_error("coefficient_histogram: need at least one t");
  int T = 0;
  for (int t : t_values) {
    if (t < 1) throw std::domain_error("coefficient_histogram: t must be >= 1");
    T = std::max(T, t);
  }

  const Circuit grover = build_grover_gate(n);
  const Circuit synth = synthesis_on_register(n, grover.num_ancilla_qubits);
  const int m = grover.num_qubits();
  const std::uint64_t data_dim = std::uint64_t{1} << n;
  const std::uint64_t data_mask = data_dim - 1;
  const std::size_t n_slots = t_values.size();

  std::vector<int> slot_of_t(T + 1, -1);
  for (std::size_t s = 0; s < n_slots; ++s) slot_of_t[t_values[s]] = static_cast<int>(s);

  const long n_chunks =
      (cfg.n_trajectories + kTrajectoryChunk - 1) / kTrajectoryChunk;
  std::vector<std::vector<MeanAcc>> chunk_acc(
      n_chunks, std::vector<MeanAcc>(n_slots * data_dim));

  parallel_chunks(
      cfg.n_trajectories, kTrajectoryChunk, cfg.workers,
      [&](long chunk, long begin, long end) {
        auto& acc = chunk_acc[chunk];
        std::vector<double> marg(data_dim);
        for (long traj = begin; traj < end; ++traj) {
          RandomStream rng(cfg.master_seed, static_cast<std::uint64_t>(traj));
          StateVector state(m, 0);
          apply_noisy(synth, params, rng, state, cfg.mode);
          for (int t = 1; t <= T; ++t) {
            apply_noisy(grover, params, rng, state, cfg.mode);
            const int slot = slot_of_t[t];
            if (slot < 0) continue;
            std::fill(marg.begin(), marg.end(), 0.0);
            const auto& amp = state.amplitudes();
            for (std::uint64_t i = 0; i < state.dim(); ++i)
              marg[i & data_mask] += std::norm(amp[i]);
            for (std::uint64_t x = 0; x < data_dim; ++x)
              acc[slot * data_dim + x].add(marg[x]);
          }
        }
      });

  std::vector<WeightHistogram> out(n_slots);
  for (std::size_t s = 0; s < n_slots; ++s) {
    WeightHistogram& h = out[s];
    h.n = n;
    h.t = t_values[s];
    h.mean_sq.resize(data_dim);
    h.std_err.resize(data_dim);
    h.weight_mean.assign(n + 1, 0.0);
    std::vector<long> weight_count(n + 1, 0);
    for (std::uint64_t x = 0; x < data_dim; ++x) {
      MeanAcc total;
      for (long c = 0; c < n_chunks; ++c)
        total.merge(chunk_acc[c][s * data_dim + x]);
      h.mean_sq[x] = total.mean(cfg.n_trajectories);
      h.std_err[x] = total.stderr_of_mean(cfg.n_trajectories);
      const int w = std::popcount(x);
      h.weight_mean[w] += h.mean_sq[x];
      ++weight_count[w];
    }
    for (int w = 0; w <= n; ++w)
      if (weight_count[w] > 0) h.weight_mean[w] /= weight_count[w];
  }
  return out;
}

}  // namespace grover
