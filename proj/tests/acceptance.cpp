// Acceptance battery: one line per criterion, full stated scale.
// Exit status is the number of failed criteria.

#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "grover/analysis.hpp"
#include "grover/circuit.hpp"
#include "grover/mc.hpp"
#include "grover/steane.hpp"
#include "support/testutil.hpp"

namespace {

using namespace grover;

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 20260823;

// 1. Noiseless equivalence against the closed form, n = 2..7.
Outcome criterion_noiseless() {
  double worst = 0.0;
  for (int n = 2; n <= 7; ++n) {
    const Circuit g = build_grover_gate(n);
    StateVector s(g.num_qubits(), 0);
    Circuit synth = build_uniform_superposition(n);
    synth.num_ancilla_qubits = g.num_ancilla_qubits;
    synth.apply_to(s);
    std::vector<int> data(n);
    std::vector<int> zeros(n, 0);
    for (int q = 0; q < n; ++q) data[q] = q;
    const int k_max = 2 * static_cast<int>(
        std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, n)) / 4.0));
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) g.apply_to(s);
      worst = std::max(worst, std::abs(s.marginal_probability(data, zeros) -
                                       testutil::closed_form_ps(n, k)));
    }
  }
  // n=2 certainty at k=1.
  const Circuit g2 = build_grover_gate(2);
  StateVector s2(2, 0);
  build_uniform_superposition(2).apply_to(s2);
  g2.apply_to(s2);
  const double p2 = s2.marginal_probability({0, 1}, {0, 0});

  std::ostringstream d;
  d << "max |P - closed form| = " << worst << ", n=2 k=1 P = " << p2;
  return {worst < 1e-9 && std::abs(p2 - 1.0) < 1e-12, d.str()};
}

// 2. Chi-square tests of the sampled error-word distributions.
Outcome criterion_distributions() {
  bool ok = true;
  std::ostringstream d;

  {
    const double eps = 0.3;
    const long draws = 1000000;
    std::vector<long> counts(4, 0);
    for (long i = 0; i < draws; ++i) {
      RandomStream rng(kSeed + 1, static_cast<std::uint64_t>(i));
      const PauliWord w = sample_memory_word({0}, eps, rng);
      counts[w.trivial() ? 0 : static_cast<int>(w.terms[0].second)]++;
    }
    const std::vector<double> probs{1 - eps, eps / 3, eps / 3, eps / 3};
    const double stat = testutil::chi_square_statistic(counts, probs, draws);
    const double crit = testutil::chi_square_critical(3, testutil::kZ999);
    ok = ok && stat < crit;
    d << "memory chi2 " << stat << " (crit " << crit << ")";
  }

  const Gate gates[] = {make_h(0), make_cnot(0, 1), make_toffoli(0, 1, 2)};
  const double gamma = 0.4;
  for (const Gate& gate : gates) {
    const int options = (1 << (2 * gate.arity())) - 1;
    const long draws = options > 15 ? 1000000 : 300000;
    std::vector<long> counts(options + 1, 0);
    const int support[3] = {gate.q0, gate.q1, gate.q2};
    for (long i = 0; i < draws; ++i) {
      RandomStream rng(kSeed + 2 + options, static_cast<std::uint64_t>(i));
      const PauliWord w = sample_gate_error(gate, gamma, rng);
      int code = 0;
      for (const auto& [q, p] : w.terms)
        for (int s = 0; s < gate.arity(); ++s)
          if (support[s] == q) code |= static_cast<int>(p) << (2 * s);
      counts[code]++;
    }
    std::vector<double> probs(options + 1, gamma / options);
    probs[0] = 1 - gamma;
    const double stat = testutil::chi_square_statistic(counts, probs, draws);
    const double crit = testutil::chi_square_critical(options, testutil::kZ999);
    ok = ok && stat < crit;
    d << "; " << options << "-word chi2 " << stat << " (crit " << crit << ")";
  }
  return {ok, d.str()};
}

// 3. Monte Carlo vs exact channel evolution, n=2, eps=gamma=0.01, N_C=1e5.
Outcome criterion_branch_sum() {
  const NoiseParams params(0.01, 0.01);
  Circuit net = build_uniform_superposition(2);
  net.append(build_grover_gate(2));
  testutil::DensityMatrix rho(2, 0);
  rho.apply_noisy_circuit(net, params);
  const double exact = rho.prob_data_zero(2);

  McConfig cfg{100000, kSeed + 3, 0, MemoryMode::Additive};
  const SuccessCurve curve = estimate_success_curve(2, params, 1, cfg);
  const double dev = std::abs(curve.p_success[1] - exact) / curve.std_err[1];
  std::ostringstream d;
  d << "exact " << exact << ", MC " << curve.p_success[1] << " +/- " << curve.std_err[1]
    << " (" << dev << " sigma)";
  return {dev < 3.0, d.str()};
}

// 4. Exponential damping law at n=4.
Outcome criterion_damping() {
  const NoiseParams params(1.0 / 3000, 1.0 / 5000);
  McConfig cfg{50000, kSeed + 4, 0, MemoryMode::Additive};
  const SuccessCurve curve = estimate_success_curve(4, params, 40, cfg);
  const auto maxima = find_maxima(curve.p_success);
  std::vector<double> errs;
  for (const auto& [t, p] : maxima) errs.push_back(curve.std_err[t]);
  const DampingFit fit = fit_damping(maxima, 4, errs);

  const bool residual_ok = fit.residual_rms < 0.1;  // the hard sub-criterion
  const double ref = 0.0282;
  const bool lambda_in_band = std::abs(fit.lambda - ref) <= 0.3 * ref;  // soft
  std::ostringstream d;
  d << "ln-residual rms " << fit.residual_rms << " (< 0.1 required); lambda_fit "
    << fit.lambda << " vs reference " << ref << " -> soft band "
    << (lambda_in_band ? "HIT" : "MISS")
    << " (deviation " << 100.0 * (fit.lambda / ref - 1.0)
    << "%, model value " << lambda_model(params.epsilon, params.gamma, 4) << ")";
  return {residual_ok, d.str()};
}

// 5. First-maximum drift at n=5 over an eps = gamma grid.
Outcome criterion_first_max_drift() {
  const std::vector<double> inv_eps{4000, 3000, 2500, 2000, 1500, 1000, 700, 500};
  std::vector<int> t1s;
  for (std::size_t i = 0; i < inv_eps.size(); ++i) {
    const NoiseParams params(1.0 / inv_eps[i], 1.0 / inv_eps[i]);
    McConfig cfg{required_trajectories(params),
                 RandomStream::splitmix64(kSeed + 5 + i), 0, MemoryMode::Additive};
    const SuccessCurve curve = estimate_success_curve(5, params, 8, cfg);
    t1s.push_back(first_maximum(curve.p_success).first);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < t1s.size(); ++i) monotone = monotone && t1s[i] <= t1s[i - 1];
  // t1 = 4 somewhere within one grid step of 1/eps = 2000.
  const bool hits_four = t1s[2] == 4 || t1s[3] == 4 || t1s[4] == 4;
  std::ostringstream d;
  d << "t1 over 1/eps {4000..500}: ";
  for (int t : t1s) d << t << " ";
  return {monotone && hits_four, d.str()};
}

// 6. Weight structure of the coefficient histogram at n=5.
Outcome criterion_weight_structure() {
  // Second probe: the uniform steady state. The regime starts around
  // t = 30 but the slowest transient mode decays at only ~0.021 per
  // iteration (exact channel evolution: max |p - 1/32| is 7.9e-4 at
  // t = 220, 2e-5 at t = 400), so uniformity is resolvable by 2e4
  // trajectories until t ~ 350. Evaluated at t = 400.
  const NoiseParams params(1.0 / 2000, 1.0 / 2000);
  McConfig cfg{20000, kSeed + 6, 0, MemoryMode::Additive};
  const auto hists = coefficient_histogram(5, params, {4, 400}, cfg);

  const auto group_stats = [](const WeightHistogram& h, int weight) {
    double mean = 0.0, var = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < h.mean_sq.size(); ++i) {
      if (std::popcount(static_cast<unsigned>(i)) != weight) continue;
      mean += h.mean_sq[i];
      var += h.std_err[i] * h.std_err[i];
      ++count;
    }
    return std::pair{mean / count, std::sqrt(var) / count};
  };
  const auto [w1, se1] = group_stats(hists[0], 1);
  const auto [w2, se2] = group_stats(hists[0], 2);
  const double sep = (w1 - w2) / std::hypot(se1, se2);

  double worst_sigma = 0.0;
  for (std::size_t i = 0; i < hists[1].mean_sq.size(); ++i)
    worst_sigma = std::max(worst_sigma, std::abs(hists[1].mean_sq[i] - 1.0 / 32) /
                                            hists[1].std_err[i]);
  std::ostringstream d;
  d << "t=4 weight-1 mean " << w1 << " vs weight-2 " << w2 << " (" << sep
    << " sigma); t=400 worst |mean - 1/32| = " << worst_sigma << " sigma";
  return {sep > 3.0 && worst_sigma < 3.0, d.str()};
}

// 7. Threshold law shape, C = 1, n = 2..5.
Outcome criterion_threshold_law() {
  std::vector<std::pair<int, double>> points;
  std::ostringstream d;
  for (int n = 2; n <= 5; ++n) {
    ThresholdSolveConfig cfg;
    cfg.master_seed = RandomStream::splitmix64(kSeed + 7 + 101 * n);
    cfg.nc_cap = 100000;
    const ThresholdResult res = solve_threshold(n, 1.0, cfg);
    points.emplace_back(n, res.eps_th);
    d << "n=" << n << " eps_th " << res.eps_th << "; ";
  }
  const ThresholdFit fit = fit_threshold_law(points);
  d << "a " << fit.a << ", b " << fit.b << ", r2 " << fit.r2;
  return {fit.r2 > 0.98 && fit.a >= 0.8 && fit.a <= 1.4, d.str()};
}

// 8. Exact code properties.
Outcome criterion_code_properties() {
  const CodeTables tables = CodeTables::standard();
  bool ok = tables.min_distance_code() == 3 && tables.min_distance_dual() == 4;

  const auto rep = weight_equivalence_check(tables);
  ok = ok && rep.ok && rep.pairs.size() == 21;

  // Verification coverage over all 127 nonzero bit-flip words: words in
  // C_perp act trivially on |0_E> (no error to detect); every other word
  // must leave the measured check block outside C_perp.
  const StateVector zero = logical_zero_ideal(tables);
  bool all_detected = true;
  for (int v = 1; v < 128; ++v) {
    StateVector data = zero;
    PauliWord xv;
    for (int i = 0; i < 7; ++i)
      if (v & (1 << i)) xv.add(i, Pauli::X);
    data.apply_pauli_word(xv);
    if (tables.in_dual(v)) {
      for (std::uint64_t i = 0; i < data.dim(); ++i)
        if (std::abs(data.amplitudes()[i] - zero.amplitudes()[i]) > 1e-12)
          all_detected = false;
      continue;
    }
    StateVector joint = StateVector::tensor(data, zero);
    for (const auto& g : transversal_gate(GateKind::CNOT, {0, 7})) joint.apply_gate(g);
    for (std::uint64_t i = 0; i < joint.dim(); ++i)
      if (std::norm(joint.amplitudes()[i]) > 1e-15 &&
          tables.in_dual(static_cast<int>(i >> 7)))
        all_detected = false;
  }
  ok = ok && all_detected;

  McConfig cfg{16, kSeed + 8, 0, MemoryMode::Additive};
  const EncodedExperimentResult noiseless = run_encoded_experiment(0.0, 1.0, cfg);
  ok = ok && std::abs(noiseless.encoded_ps - 1.0) < 1e-9;

  std::ostringstream d;
  d << "distances (3,4); weight pairs " << rep.pairs.size() << "; all 127 flips detected "
    << (all_detected ? "yes" : "NO") << "; noiseless encoded P_S " << noiseless.encoded_ps;
  return {ok, d.str()};
}

// 9. Quadratic scaling of the verified-preparation logical error rate.
Outcome criterion_prep_scaling() {
  const double eps_values[] = {1e-3, 2e-3, 4e-3, 8e-3};
  const long traj[] = {200000, 100000, 50000, 25000};
  std::vector<double> xs, ys;
  std::ostringstream d;
  for (int i = 0; i < 4; ++i) {
    const NoiseParams params(eps_values[i], eps_values[i]);
    McConfig cfg{traj[i], kSeed + 9 + i, 0, MemoryMode::Additive};
    const PrepErrorEstimate est = estimate_prep_logical_error(params, cfg, 64);
    d << "eps " << eps_values[i] << " -> rate " << est.rate << " +/- " << est.stderr_
      << "; ";
    if (est.rate <= 0.0) return {false, d.str() + "zero event count"};
    xs.push_back(std::log(eps_values[i]));
    ys.push_back(std::log(est.rate));
  }
  const LinearFit fit = fit_linear(xs, ys);
  d << "log-log slope " << fit.slope;
  return {std::abs(fit.slope - 2.0) <= 0.5, d.str()};
}

// 10. Encoded-versus-bare crossover at C = 1.
Outcome criterion_encoded_crossover() {
  const double grid[] = {1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2, 3.2e-2, 6.4e-2};
  bool encoded_wins = false, bare_wins = false;
  std::ostringstream d;
  for (std::size_t i = 0; i < std::size(grid); ++i) {
    const NoiseParams params = NoiseParams::from_ratio(grid[i], 1.0);
    McConfig cfg{required_trajectories(params),
                 RandomStream::splitmix64(kSeed + 10 + i), 0, MemoryMode::Additive};
    const EncodedExperimentResult r = run_encoded_experiment(grid[i], 1.0, cfg);
    const double sep =
        (r.encoded_ps - r.bare_ps) / std::hypot(r.encoded_stderr, r.bare_stderr);
    if (sep > 3.0) encoded_wins = true;
    if (sep < -3.0 && encoded_wins) bare_wins = true;
    d << "eps " << grid[i] << ": enc " << r.encoded_ps << " bare " << r.bare_ps << " ("
      << sep << " sigma); ";
  }
  return {encoded_wins && bare_wins, d.str()};
}

// 11. Determinism across worker counts on a representative workload.
Outcome criterion_determinism() {
  const NoiseParams params(0.01, 0.01);
  bool ok = true;
  SuccessCurve ref;
  for (int workers : {1, 2, 8}) {
    McConfig cfg{20000, kSeed + 11, workers, MemoryMode::Additive};
    const SuccessCurve c = estimate_success_curve(4, params, 10, cfg);
    if (workers == 1) {
      ref = c;
      continue;
    }
    for (int t = 0; t <= c.max_t(); ++t)
      ok = ok && c.p_success[t] == ref.p_success[t] && c.std_err[t] == ref.std_err[t];
  }
  EncodedExperimentResult enc_ref;
  for (int workers : {1, 4}) {
    McConfig cfg{2000, kSeed + 12, workers, MemoryMode::Additive};
    const EncodedExperimentResult r = run_encoded_experiment(4e-3, 1.0, cfg);
    if (workers == 1) {
      enc_ref = r;
      continue;
    }
    ok = ok && r.encoded_ps == enc_ref.encoded_ps && r.bare_ps == enc_ref.bare_ps;
  }
  return {ok, ok ? "identical curves and encoded results for 1/2/4/8 workers"
                 : "worker count changed results"};
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const Entry entries[] = {
      {"noiseless closed-form equivalence (n=2..7)", criterion_noiseless},
      {"error-word distributions (chi-square)", criterion_distributions},
      {"exact branch-sum agreement (n=2)", criterion_branch_sum},
      {"exponential damping law (n=4)", criterion_damping},
      {"first-maximum drift (n=5)", criterion_first_max_drift},
      {"weight structure of coefficients (n=5)", criterion_weight_structure},
      {"threshold law shape (C=1, n=2..5)", criterion_threshold_law},
      {"code properties (exact)", criterion_code_properties},
      {"verified-preparation quadratic scaling", criterion_prep_scaling},
      {"encoded crossover (C=1)", criterion_encoded_crossover},
      {"determinism across worker counts", criterion_determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& e : entries) {
    ++index;
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::printf("criterion %2d: %s  %s\n              %s\n", index,
                o.pass ? "PASS" : "FAIL", e.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/11 criteria passed\n", 11 - failures);
  return failures;
}
