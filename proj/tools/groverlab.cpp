// Command-line laboratory for the noisy Grover experiments: success
// curves and damping fits, first-maximum drift, coefficient histograms,
// thresholds and the allowed-error law, and the encoded two-qubit run.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "grover/analysis.hpp"
#include "grover/circuit.hpp"
#include "grover/io.hpp"
#include "grover/mc.hpp"
#include "grover/steane.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitThresholdOutOfRange = 3;
constexpr int kExitPrepFailure = 4;

using namespace grover;

struct CommonOpts {
  std::uint64_t seed = 0;
  int workers = 0;
  long nc_override = 0;  // 0 = use the N_C rule
  std::string out;       // empty = stdout
  std::string format = "csv";
  bool folded_memory = false;

  MemoryMode mode() const {
    return folded_memory ? MemoryMode::Folded : MemoryMode::Additive;
  }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool needs_nc = true) {
  cmd->add_option("--seed", c.seed, "Master seed (mandatory)")->required();
  cmd->add_option("--workers", c.workers, "Worker threads (0 = all); never changes results");
  if (needs_nc) cmd->add_option("--nc", c.nc_override, "Trajectory count override");
  cmd->add_option("--out", c.out, "Output path (default stdout)");
  cmd->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--folded-memory", c.folded_memory,
                "Skip the per-step memory word on gate qubits (sensitivity switch)");
}

struct NoiseOpts {
  double epsilon = -1.0, gamma = -1.0;
  double inv_epsilon = 0.0, inv_gamma = 0.0;

  NoiseParams resolve() const {
    double eps = epsilon, gam = gamma;
    if (inv_epsilon > 0.0) eps = 1.0 / inv_epsilon;
    if (inv_gamma > 0.0) gam = 1.0 / inv_gamma;
    if (eps < 0.0 || gam < 0.0)
      throw CLI::ValidationError("noise", "need --epsilon/--inv-epsilon and --gamma/--inv-gamma");
    return NoiseParams(eps, gam);
  }
};

void add_noise(CLI::App* cmd, NoiseOpts& n) {
  cmd->add_option("--epsilon", n.epsilon, "Memory error probability per qubit per step");
  cmd->add_option("--gamma", n.gamma, "Gate error probability per location");
  cmd->add_option("--inv-epsilon", n.inv_epsilon, "1/epsilon (as quoted in the tables)");
  cmd->add_option("--inv-gamma", n.inv_gamma, "1/gamma");
}

// "4" or "2..7"
std::pair<int, int> parse_n_range(const std::string& s) {
  const auto dots = s.find("..");
  int lo, hi;
  if (dots == std::string::npos) {
    lo = hi = std::stoi(s);
  } else {
    lo = std::stoi(s.substr(0, dots));
    hi = std::stoi(s.substr(dots + 2));
  }
  if (lo < 2 || hi > 12 || lo > hi)
    throw CLI::ValidationError("--n", "qubit range must be within [2, 12]");
  return {lo, hi};
}

void emit(const CommonOpts& c, const std::string& text, const std::string& suffix = "") {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  const std::string path = suffix.empty() ? c.out : c.out + suffix;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

long choose_nc(const CommonOpts& c, const NoiseParams& p) {
  return c.nc_override > 0 ? c.nc_override : required_trajectories(p);
}

Provenance base_provenance(const CommonOpts& c) {
  Provenance prov;
  prov.master_seed = c.seed;
  prov.set("memory_mode", c.folded_memory ? std::string("folded") : std::string("additive"));
  return prov;
}

double noiseless_ps(int n, int k) {
  const double theta2 = std::asin(1.0 / std::sqrt(std::ldexp(1.0, n)));
  const double s = std::sin((2 * k + 1) * theta2);
  return s * s;
}

int run_noiseless_check(const std::string& n_range, const CommonOpts& c) {
  const auto [n_lo, n_hi] = parse_n_range(n_range);
  std::ostringstream os;
  write_csv_provenance(os, base_provenance(c));
  os << "n,max_abs_error\n";
  bool ok = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    const Circuit grover = build_grover_gate(n);
    StateVector state(grover.num_qubits(), 0);
    Circuit synth = build_uniform_superposition(n);
    synth.num_ancilla_qubits = grover.num_ancilla_qubits;
    synth.apply_to(state);
    std::vector<int> data(n);
    std::vector<int> zeros(n, 0);
    for (int q = 0; q < n; ++q) data[q] = q;
    const int k_max =
        2 * static_cast<int>(std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, n)) / 4.0));
    double worst = std::abs(state.marginal_probability(data, zeros) - noiseless_ps(n, 0));
    for (int k = 1; k <= std::max(1, k_max); ++k) {
      grover.apply_to(state);
      worst = std::max(worst, std::abs(state.marginal_probability(data, zeros) -
                                       noiseless_ps(n, k)));
    }
    ok = ok && worst < 1e-9;
    os << n << "," << format_double(worst) << "\n";
  }
  emit(c, os.str());
  std::cerr << (ok ? "noiseless-check: all within 1e-9\n"
                   : "noiseless-check: TOLERANCE EXCEEDED\n");
  return ok ? 0 : 1;
}

int run_damping(int n, const NoiseOpts& noise, int T, const CommonOpts& c) {
  const NoiseParams params = noise.resolve();
  McConfig mc{choose_nc(c, params), c.seed, c.workers, c.mode()};
  const SuccessCurve curve = estimate_success_curve(n, params, T, mc);

  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("damping"));
  prov.set("n", static_cast<long>(n));
  prov.set("n_traj", mc.n_trajectories);

  const auto maxima = find_maxima(curve.p_success);
  std::vector<double> errs;
  for (const auto& [t, p] : maxima) errs.push_back(curve.std_err[t]);
  std::optional<DampingFit> fit;
  try {
    fit = fit_damping(maxima, n, errs);
  } catch (const std::exception& e) {
    std::cerr << "damping: fit unavailable: " << e.what() << "\n";
  }

  if (c.format == "json") {
    emit(c, success_curve_json(curve, prov), c.out.empty() ? "" : "_curve.json");
  } else {
    std::ostringstream os;
    write_success_curve_csv(os, curve, prov);
    emit(c, os.str(), c.out.empty() ? "" : "_curve.csv");
  }
  if (fit) {
    emit(c, damping_fit_json(*fit, n, params, prov), c.out.empty() ? "" : "_fit.json");
    std::cerr << "lambda_fit=" << fit->lambda
              << " lambda_model=" << lambda_model(params.epsilon, params.gamma, n)
              << " A=" << fit->A << " residual_rms_ln=" << fit->residual_rms << "\n";
  }
  return 0;
}

int run_first_max(int n, double eps_min, double eps_max, int points_per_decade,
                  const CommonOpts& c) {
  std::ostringstream os;
  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("first-max"));
  prov.set("n", static_cast<long>(n));
  write_csv_provenance(os, prov);
  os << "epsilon,t1,p_t1,stderr,n_traj\n";

  const double ratio = std::pow(10.0, 1.0 / points_per_decade);
  const int t1_ideal =
      static_cast<int>(std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, n)) / 4.0));
  int point = 0;
  for (double eps = eps_min; eps <= eps_max * (1.0 + 1e-12); eps *= ratio, ++point) {
    const NoiseParams params(eps, eps);  // the scan fixes epsilon = gamma
    McConfig mc{choose_nc(c, params), RandomStream::splitmix64(c.seed + point),
                c.workers, c.mode()};
    const SuccessCurve curve =
        estimate_success_curve(n, params, std::max(3, t1_ideal + 3), mc);
    try {
      const auto [t1, p] = first_maximum(curve.p_success);
      os << format_double(eps) << "," << t1 << "," << format_double(p) << ","
         << format_double(curve.std_err[t1]) << "," << mc.n_trajectories << "\n";
    } catch (const std::exception&) {
      os << format_double(eps) << ",-1,0,0," << mc.n_trajectories << "\n";
    }
  }
  emit(c, os.str());
  return 0;
}

int run_coefficients(int n, const NoiseOpts& noise, const std::vector<int>& ts,
                     const CommonOpts& c) {
  const NoiseParams params = noise.resolve();
  McConfig mc{choose_nc(c, params), c.seed, c.workers, c.mode()};
  const auto hists = coefficient_histogram(n, params, ts, mc);

  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("coefficients"));
  prov.set("n", static_cast<long>(n));
  prov.set("epsilon", params.epsilon);
  prov.set("gamma", params.gamma);
  prov.set("n_traj", mc.n_trajectories);
  if (c.format == "json") {
    emit(c, histograms_json(hists, prov));
  } else {
    std::ostringstream os;
    write_histograms_csv(os, hists, prov);
    emit(c, os.str());
  }
  return 0;
}

int run_threshold(int n, double C, double p_th, const CommonOpts& c, long nc_cap) {
  ThresholdSolveConfig cfg;
  cfg.p_th = p_th;
  cfg.master_seed = c.seed;
  cfg.workers = c.workers;
  cfg.mode = c.mode();
  if (nc_cap > 0) cfg.nc_cap = nc_cap;
  if (c.nc_override > 0) cfg.nc_floor = cfg.nc_cap = c.nc_override;
  const ThresholdResult res = solve_threshold(n, C, cfg);

  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("threshold"));
  std::ostringstream os;
  write_thresholds_csv(os, C, {{n, res.eps_th, res.t1_at_threshold, res.p_at_threshold}},
                       prov);
  emit(c, os.str());
  std::cerr << "eps_th(" << "C=" << C << ", n=" << n << ") = " << res.eps_th
            << " (t1=" << res.t1_at_threshold << ", " << res.evaluations
            << " MC evaluations)\n";
  return 0;
}

int run_threshold_law(const std::string& n_range, double C, double p_th,
                      const CommonOpts& c, long nc_cap) {
  const auto [n_lo, n_hi] = parse_n_range(n_range);
  std::vector<ThresholdPoint> points;
  std::vector<std::pair<int, double>> fit_input;
  for (int n = n_lo; n <= n_hi; ++n) {
    ThresholdSolveConfig cfg;
    cfg.p_th = p_th;
    cfg.master_seed = RandomStream::splitmix64(c.seed + 1000003ULL * n);
    cfg.workers = c.workers;
    cfg.mode = c.mode();
    if (nc_cap > 0) cfg.nc_cap = nc_cap;
    if (c.nc_override > 0) cfg.nc_floor = cfg.nc_cap = c.nc_override;
    const ThresholdResult res = solve_threshold(n, C, cfg);
    points.push_back({n, res.eps_th, res.t1_at_threshold, res.p_at_threshold});
    fit_input.emplace_back(n, res.eps_th);
    std::cerr << "n=" << n << " eps_th=" << res.eps_th << "\n";
  }
  const ThresholdFit fit = fit_threshold_law(fit_input);

  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("threshold-law"));
  std::ostringstream os;
  write_thresholds_csv(os, C, points, prov);
  emit(c, os.str(), c.out.empty() ? "" : "_points.csv");
  emit(c, threshold_law_json(C, points, fit, prov), c.out.empty() ? "" : "_fit.json");
  std::cerr << "a=" << fit.a << " b=" << fit.b << " r2=" << fit.r2 << "\n";
  return 0;
}

int run_encoded(double C, const std::vector<double>& eps_grid, int max_restarts,
                const CommonOpts& c) {
  std::vector<EncodedExperimentResult> rows;
  bool prep_dominated = false;
  int point = 0;
  for (double eps : eps_grid) {
    const NoiseParams params = NoiseParams::from_ratio(eps, C);
    McConfig mc{choose_nc(c, params), RandomStream::splitmix64(c.seed + point++),
                c.workers, c.mode()};
    const EncodedExperimentResult r = run_encoded_experiment(eps, C, mc, max_restarts);
    if (r.prep_failures * 2 > r.n_trajectories) prep_dominated = true;
    rows.push_back(r);
    std::cerr << "eps=" << eps << " encoded=" << r.encoded_ps << " bare=" << r.bare_ps
              << " attempts=" << r.mean_attempts << "\n";
  }
  Provenance prov = base_provenance(c);
  prov.set("experiment", std::string("encoded"));
  std::ostringstream os;
  write_encoded_csv(os, rows, prov);
  emit(c, os.str());
  return prep_dominated ? kExitPrepFailure : 0;
}

int run_circuit(int n, bool dump, const CommonOpts& c) {
  Circuit network = build_uniform_superposition(n);
  const Circuit grover = build_grover_gate(n);
  network.num_ancilla_qubits = grover.num_ancilla_qubits;
  network.append(grover);
  std::ostringstream os;
  if (dump) {
    os << dump_gates(network);
  } else {
    os << pretty_print(network);
    const ResourceCounts actual = resource_counts(network);
    const ResourceCounts paper = paper_resource_formulas(n);
    os << "resource counts (actual / reference formula):\n"
       << "  toffoli  " << actual.toffoli << " / " << paper.toffoli << "\n"
       << "  cnot     " << actual.cnot << " / " << paper.cnot << "\n"
       << "  hadamard " << actual.hadamard << " / " << paper.hadamard << "\n"
       << "  x        " << actual.x << " / " << paper.x << "\n"
       << "  z        " << actual.z << " / " << paper.z << "\n"
       << "  steps    " << actual.time_steps << " / " << paper.time_steps << "\n"
       << "  ancillas " << actual.ancillas << " / " << paper.ancillas << "\n";
  }
  emit(c, os.str());
  return 0;
}

int run_paper_suite(const CommonOpts& c);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groverlab: Monte Carlo study of Grover search under depolarizing noise"};
  app.require_subcommand(1);

  // noiseless-check
  auto* sc_nl = app.add_subcommand("noiseless-check",
                                   "Compare the built network against the closed form");
  std::string nl_range = "2..7";
  CommonOpts nl_c;
  sc_nl->add_option("--n", nl_range, "n or range n_lo..n_hi");
  sc_nl->add_option("--out", nl_c.out, "Output path");
  sc_nl->add_option("--seed", nl_c.seed, "Seed (recorded, not used)");

  // damping
  auto* sc_damp = app.add_subcommand("damping", "Success curve and exponential fit");
  int damp_n = 4, damp_T = 40;
  NoiseOpts damp_noise;
  CommonOpts damp_c;
  sc_damp->add_option("--n", damp_n)->required();
  sc_damp->add_option("--T", damp_T, "Grover iterations");
  add_noise(sc_damp, damp_noise);
  add_common(sc_damp, damp_c);

  // first-max
  auto* sc_fm = app.add_subcommand("first-max",
                                   "First-maximum location over an epsilon=gamma grid");
  int fm_n = 5, fm_ppd = 20;
  double fm_lo = 1e-4, fm_hi = 3e-2;
  CommonOpts fm_c;
  sc_fm->add_option("--n", fm_n)->required();
  sc_fm->add_option("--eps-min", fm_lo);
  sc_fm->add_option("--eps-max", fm_hi);
  sc_fm->add_option("--points-per-decade", fm_ppd);
  add_common(sc_fm, fm_c);

  // coefficients
  auto* sc_coef = app.add_subcommand("coefficients",
                                     "Mean squared coefficient per basis state");
  int coef_n = 5;
  std::vector<int> coef_t{4, 6, 8};
  NoiseOpts coef_noise;
  CommonOpts coef_c;
  sc_coef->add_option("--n", coef_n)->required();
  sc_coef->add_option("--t", coef_t, "Iteration counts")->delimiter(',');
  add_noise(sc_coef, coef_noise);
  add_common(sc_coef, coef_c);

  // threshold
  auto* sc_th = app.add_subcommand("threshold", "Solve P_S(t1) = P_th for one n");
  int th_n = 3;
  double th_C = 1.0, th_pth = 0.5;
  long th_cap = 0;
  CommonOpts th_c;
  sc_th->add_option("--n", th_n)->required();
  sc_th->add_option("--C", th_C, "epsilon/gamma ratio (inf for gamma=0)");
  sc_th->add_option("--p-th", th_pth);
  sc_th->add_option("--nc-cap", th_cap);
  add_common(sc_th, th_c);

  // threshold-law
  auto* sc_law = app.add_subcommand("threshold-law",
                                    "Per-n thresholds and the log-linear law fit");
  std::string law_range = "2..6";
  double law_C = 1.0, law_pth = 0.5;
  long law_cap = 0;
  CommonOpts law_c;
  sc_law->add_option("--n", law_range, "range, e.g. 2..6");
  sc_law->add_option("--C", law_C);
  sc_law->add_option("--p-th", law_pth);
  sc_law->add_option("--nc-cap", law_cap);
  add_common(sc_law, law_c);

  // encoded
  auto* sc_enc = app.add_subcommand("encoded",
                                    "Encoded vs bare two-qubit Grover over an eps grid");
  double enc_C = 1.0;
  std::vector<double> enc_grid{5e-4, 1e-3, 2e-3, 4e-3, 8e-3, 1.6e-2, 3.2e-2};
  int enc_restarts = 64;
  CommonOpts enc_c;
  sc_enc->add_option("--C", enc_C);
  sc_enc->add_option("--eps", enc_grid, "Epsilon grid")->delimiter(',');
  sc_enc->add_option("--max-restarts", enc_restarts);
  add_common(sc_enc, enc_c);

  // circuit
  auto* sc_circ = app.add_subcommand("circuit", "Print the one-iteration network");
  int circ_n = 4;
  bool circ_dump = false;
  CommonOpts circ_c;
  sc_circ->add_option("--n", circ_n)->required();
  sc_circ->add_flag("--dump", circ_dump, "Machine-readable gate list");
  sc_circ->add_option("--out", circ_c.out);

  // paper-suite
  auto* sc_suite = app.add_subcommand("paper-suite",
                                      "Scaled-down verification battery (pass/fail table)");
  CommonOpts suite_c;
  sc_suite->add_option("--seed", suite_c.seed)->required();
  sc_suite->add_option("--workers", suite_c.workers);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc_nl->parsed()) return run_noiseless_check(nl_range, nl_c);
    if (sc_damp->parsed()) return run_damping(damp_n, damp_noise, damp_T, damp_c);
    if (sc_fm->parsed()) return run_first_max(fm_n, fm_lo, fm_hi, fm_ppd, fm_c);
    if (sc_coef->parsed()) return run_coefficients(coef_n, coef_noise, coef_t, coef_c);
    if (sc_th->parsed()) return run_threshold(th_n, th_C, th_pth, th_c, th_cap);
    if (sc_law->parsed()) return run_threshold_law(law_range, law_C, law_pth, law_c, law_cap);
    if (sc_enc->parsed()) return run_encoded(enc_C, enc_grid, enc_restarts, enc_c);
    if (sc_circ->parsed()) return run_circuit(circ_n, circ_dump, circ_c);
    if (sc_suite->parsed()) return run_paper_suite(suite_c);
  } catch (const ThresholdOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitThresholdOutOfRange;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

namespace {

int run_paper_suite(const CommonOpts& c) {
  int failures = 0;
  auto report = [&](const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
  };
  std::ostringstream detail;

  // Closed-form agreement of the noiseless network, n = 2..5.
  {
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
      const Circuit grover = build_grover_gate(n);
      StateVector state(grover.num_qubits(), 0);
      Circuit synth = build_uniform_superposition(n);
      synth.num_ancilla_qubits = grover.num_ancilla_qubits;
      synth.apply_to(state);
      std::vector<int> data(n);
      std::vector<int> zeros(n, 0);
      for (int q = 0; q < n; ++q) data[q] = q;
      for (int k = 1; k <= 6; ++k) {
        grover.apply_to(state);
        worst = std::max(worst, std::abs(state.marginal_probability(data, zeros) -
                                         noiseless_ps(n, k)));
      }
    }
    detail.str("");
    detail << "max deviation " << worst;
    report("noiseless closed form (n=2..5)", worst < 1e-9, detail.str());
  }

  // Damping shape, reduced scale.
  {
    const NoiseParams params(1.0 / 3000, 1.0 / 5000);
    McConfig mc{20000, c.seed, c.workers, c.mode()};
    const SuccessCurve curve = estimate_success_curve(4, params, 40, mc);
    const auto maxima = find_maxima(curve.p_success);
    bool ok = false;
    double lam = 0.0, rms = 0.0;
    if (maxima.size() >= 3) {
      std::vector<double> errs;
      for (const auto& [t, p] : maxima) errs.push_back(curve.std_err[t]);
      const DampingFit fit = fit_damping(maxima, 4, errs);
      lam = fit.lambda;
      rms = fit.residual_rms;
      ok = rms < 0.15 && lam > 0.0;
    }
    detail.str("");
    detail << "lambda_fit " << lam << ", ln-residual rms " << rms;
    report("exponential damping (n=4, reduced N_C)", ok, detail.str());
  }

  // First-maximum drift, three eps values.
  {
    std::vector<int> t1s;
    for (double inv_eps : {4000.0, 2000.0, 500.0}) {
      const NoiseParams params(1.0 / inv_eps, 1.0 / inv_eps);
      McConfig mc{20000, c.seed + 11, c.workers, c.mode()};
      const SuccessCurve curve = estimate_success_curve(5, params, 7, mc);
      t1s.push_back(first_maximum(curve.p_success).first);
    }
    const bool ok = t1s[0] >= t1s[1] && t1s[1] >= t1s[2] && t1s[1] == 4;
    detail.str("");
    detail << "t1 = " << t1s[0] << "," << t1s[1] << "," << t1s[2];
    report("first-maximum drift (n=5)", ok, detail.str());
  }

  // Weight-1 local maxima in the coefficient histogram.
  {
    const NoiseParams params(5e-4, 5e-4);
    McConfig mc{10000, c.seed + 17, c.workers, c.mode()};
    const auto hists = coefficient_histogram(5, params, {4}, mc);
    const bool ok = hists[0].weight_mean[1] > hists[0].weight_mean[2];
    detail.str("");
    detail << "w1 mean " << hists[0].weight_mean[1] << " vs w2 mean "
           << hists[0].weight_mean[2];
    report("weight-structure (n=5, t=4)", ok, detail.str());
  }

  // Threshold-law shape, reduced range and caps.
  {
    std::vector<std::pair<int, double>> pts;
    bool solved = true;
    for (int n = 2; n <= 4; ++n) {
      ThresholdSolveConfig cfg;
      cfg.master_seed = RandomStream::splitmix64(c.seed + 23 * n);
      cfg.workers = c.workers;
      cfg.mode = c.mode();
      cfg.nc_floor = 5000;
      cfg.nc_cap = 40000;
      cfg.rel_tol = 0.05;
      try {
        pts.emplace_back(n, solve_threshold(n, 1.0, cfg).eps_th);
      } catch (const std::exception&) {
        solved = false;
      }
    }
    bool ok = false;
    double a = 0.0, r2 = 0.0;
    if (solved && pts.size() == 3) {
      const ThresholdFit fit = fit_threshold_law(pts);
      a = fit.a;
      r2 = fit.r2;
      ok = r2 > 0.95 && a > 0.6 && a < 1.6;
    }
    detail.str("");
    detail << "a " << a << ", r2 " << r2;
    report("threshold law shape (C=1, n=2..4)", ok, detail.str());
  }

  // Closed-form law consequences.
  {
    const double em = epsilon_max(1.1, 2.3802);
    const int nmax = max_qubits(1e-5, 1.1, 2.711);
    const bool ok = std::abs(em - 0.043) < 5e-4 && nmax == 11;
    detail.str("");
    detail << "eps_max " << em << ", n_max " << nmax;
    report("allowed-error closed forms", ok, detail.str());
  }

  // Code tables and verification coverage.
  {
    const CodeTables tables = CodeTables::standard();
    const auto rep = weight_equivalence_check(tables);
    const bool ok = tables.min_distance_code() == 3 && tables.min_distance_dual() == 4 &&
                    rep.ok && rep.pairs.size() == 21;
    report("[[7,1,3]] code tables and weight equivalence", ok, "");
  }

  // FT preparation error suppression slope.
  {
    std::vector<double> xs, ys;
    bool positive = true;
    for (double eps : {2e-3, 8e-3}) {
      const NoiseParams params(eps, eps);
      McConfig mc{5000, c.seed + 31, c.workers, c.mode()};
      const PrepErrorEstimate est = estimate_prep_logical_error(params, mc, 64);
      if (est.rate <= 0.0) positive = false;
      xs.push_back(std::log(eps));
      ys.push_back(std::log(std::max(est.rate, 1e-12)));
    }
    const double slope = positive ? (ys[1] - ys[0]) / (xs[1] - xs[0]) : 0.0;
    const bool ok = positive && slope > 1.2 && slope < 2.8;
    detail.str("");
    detail << "log-log slope " << slope;
    report("verified preparation error suppression", ok, detail.str());
  }

  // Encoded vs bare ordering at a favourable and an unfavourable point.
  {
    McConfig mc{2000, c.seed + 37, c.workers, c.mode()};
    const EncodedExperimentResult low = run_encoded_experiment(1e-3, 1.0, mc);
    const EncodedExperimentResult high = run_encoded_experiment(4e-2, 1.0, mc);
    const bool ok = low.encoded_ps > low.bare_ps && high.encoded_ps < high.bare_ps;
    detail.str("");
    detail << "eps=1e-3: " << low.encoded_ps << " vs " << low.bare_ps
           << "; eps=4e-2: " << high.encoded_ps << " vs " << high.bare_ps;
    report("encoded crossover (C=1)", ok, detail.str());
  }

  // Worker-count independence.
  {
    const NoiseParams params(1e-3, 1e-3);
    McConfig one{4000, c.seed + 41, 1, c.mode()};
    McConfig many{4000, c.seed + 41, 4, c.mode()};
    const SuccessCurve a = estimate_success_curve(3, params, 6, one);
    const SuccessCurve b = estimate_success_curve(3, params, 6, many);
    bool ok = true;
    for (int t = 0; t <= a.max_t(); ++t) ok = ok && a.p_success[t] == b.p_success[t];
    report("determinism across worker counts", ok, "");
  }

  std::cout << (failures == 0 ? "paper-suite: all checks passed\n"
                              : "paper-suite: FAILURES present\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace
