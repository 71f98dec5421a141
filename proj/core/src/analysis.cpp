#include "grover/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace grover {

namespace {
constexpr double kC1 = 18.63;
constexpr double kC2 = 8.124;
constexpr double kC3 = 5.871;
constexpr double kC4 = 12.336;
}  // namespace

double lambda_model(double epsilon, double gamma, int n) {
  if (n < 2) throw std::domain_error("lambda_model: n must be >= 2");
  return (kC1 * epsilon + kC2 * gamma) * n - kC3 * epsilon - kC4 * gamma;
}

std::vector<std::pair<int, double>> find_maxima(const std::vector<double>& p) {
  const int T = static_cast<int>(p.size()) - 1;
  if (T < 2) throw std::domain_error("find_maxima: curve too short");
  std::vector<std::pair<int, double>> maxima;
  int t = 1;
  while (t <= T - 1) {
    // Run of equal values starting at t.
    int run_end = t;
    while (run_end + 1 <= T && p[run_end + 1] == p[t]) ++run_end;
    if (run_end <= T - 1 && p[t] >= p[t - 1] && p[t] >= p[run_end + 1])
      maxima.emplace_back(t, p[t]);
    t = run_end + 1;
  }
  return maxima;
}

std::pair<int, double> first_maximum(const std::vector<double>& p) {
  const auto maxima = find_maxima(p);
  if (maxima.empty())
    throw std::runtime_error("first_maximum: no local maximum (noise overwhelming)");
  return maxima.front();
}

DampingFit fit_damping(const std::vector<std::pair<int, double>>& maxima, int n,
                       const std::vector<double>& std_errs) {
  const double base = std::ldexp(1.0, -n);  // 1/2^n
  const bool weighted =
      std_errs.size() == maxima.size() &&
      std::all_of(std_errs.begin(), std_errs.end(), [](double s) { return s > 0.0; });

  std::vector<double> ts, ys, ws;
  std::vector<std::pair<int, double>> used;
  for (std::size_t i = 0; i < maxima.size(); ++i) {
    const auto& [t, P] = maxima[i];
    if (P <= base) continue;  // below the structural floor, no ln
    ts.push_back(t);
    ys.push_back(std::log(P - base));
    // Propagated ln-space sigma: sigma_P / (P - base).
    ws.push_back(weighted ? 1.0 / std::pow(std_errs[i] / (P - base), 2) : 1.0);
    used.push_back(maxima[i]);
  }
  if (used.size() < 3)
    throw std::runtime_error("fit_damping: fewer than 3 usable maxima");

  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sw += ws[i];
    swx += ws[i] * ts[i];
    swy += ws[i] * ys[i];
    swxx += ws[i] * ts[i] * ts[i];
    swxy += ws[i] * ts[i] * ys[i];
  }
  const double det = sw * swxx - swx * swx;
  const double slope = (sw * swxy - swx * swy) / det;
  const double intercept = (swxx * swy - swx * swxy) / det;

  DampingFit fit;
  fit.A = std::exp(intercept);
  fit.lambda = -slope;
  fit.baseline = base;
  fit.points_used = used;
  double ssr = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = ys[i] - (intercept + slope * ts[i]);
    ssr += r * r;
  }
  fit.residual_rms = std::sqrt(ssr / ts.size());
  return fit;
}

LinearFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n != ys.size() || n < 2) throw std::domain_error("fit_linear: need >= 2 points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double xbar = sx / n;
  const double ybar = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
    syy += (ys[i] - ybar) * (ys[i] - ybar);
  }
  if (sxx == 0.0) throw std::domain_error("fit_linear: degenerate abscissae");

  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = ybar - f.slope * xbar;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ys[i] - (f.intercept + f.slope * xs[i]);
    ssr += r * r;
  }
  const double sigma2 = n > 2 ? ssr / (n - 2) : 0.0;
  f.cov_ss = sigma2 / sxx;
  f.cov_ii = sigma2 * (1.0 / n + xbar * xbar / sxx);
  f.cov_si = -sigma2 * xbar / sxx;
  f.r2 = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
  return f;
}

ThresholdFit fit_threshold_law(const std::vector<std::pair<int, double>>& thresholds) {
  if (thresholds.size() < 3)
    throw std::domain_error("fit_threshold_law: need >= 3 points");
  std::vector<double> xs, ys;
  for (const auto& [n, eps] : thresholds) {
    xs.push_back(n * std::numbers::ln2);
    ys.push_back(std::log(eps));
  }
  const LinearFit lf = fit_linear(xs, ys);
  ThresholdFit tf;
  tf.a = -lf.slope;
  tf.b = -lf.intercept;
  tf.cov_aa = lf.cov_ss;
  tf.cov_ab = lf.cov_si;
  tf.cov_bb = lf.cov_ii;
  tf.r2 = lf.r2;
  return tf;
}

namespace {

struct CurveEval {
  double p = 0.0;
  double stderr_ = 0.0;
  int t1 = 0;
};

CurveEval evaluate_first_max(int n, double C, double eps,
                             const ThresholdSolveConfig& cfg, long* evaluations) {
  const NoiseParams params = NoiseParams::from_ratio(eps, C);
  const int t1_ideal =
      static_cast<int>(std::floor(std::numbers::pi * std::sqrt(std::ldexp(1.0, n)) / 4.0));
  const int T = std::max(3, t1_ideal + 3);

  long nc = std::clamp(required_trajectories(params, cfg.nc_floor), cfg.nc_floor,
                       cfg.nc_cap);
  for (;;) {
    McConfig mc;
    mc.n_trajectories = nc;
    mc.master_seed =
        RandomStream::splitmix64(cfg.master_seed ^ (0x7155u + 0x9e37u * (*evaluations)));
    mc.workers = cfg.workers;
    mc.mode = cfg.mode;
    ++*evaluations;
    const SuccessCurve curve = estimate_success_curve(n, params, T, mc);

    CurveEval ev;
    const auto maxima = find_maxima(curve.p_success);
    if (!maxima.empty()) {
      ev.t1 = maxima.front().first;
      ev.p = maxima.front().second;
    } else {
      // Overwhelming noise flattens the curve; score by the best
      // post-synthesis point so bisection keeps a monotone objective.
      ev.t1 = 1;
      ev.p = curve.p_success[1];
      for (int t = 2; t <= curve.max_t(); ++t)
        if (curve.p_success[t] > ev.p) {
          ev.p = curve.p_success[t];
          ev.t1 = t;
        }
    }
    ev.stderr_ = curve.std_err[ev.t1];
    // Escalate while the decision p <> p_th is inside the noise band.
    if (std::abs(ev.p - cfg.p_th) < 2.0 * ev.stderr_ && nc < cfg.nc_cap) {
      nc = std::min(2 * nc, cfg.nc_cap);
      continue;
    }
    return ev;
  }
}

}  // namespace

ThresholdResult solve_threshold(int n, double C, const ThresholdSolveConfig& cfg) {
  if (!(cfg.p_th > std::ldexp(1.0, -n) && cfg.p_th < 1.0))
    throw std::domain_error("solve_threshold: p_th outside (1/2^n, 1)");

  ThresholdResult res;
  const CurveEval at_lo = evaluate_first_max(n, C, cfg.eps_lo, cfg, &res.evaluations);
  if (at_lo.p <= cfg.p_th)
    throw ThresholdOutOfRange("solve_threshold: no bracket, P_S <= p_th at eps_lo");
  const CurveEval at_hi = evaluate_first_max(n, C, cfg.eps_hi, cfg, &res.evaluations);
  if (at_hi.p >= cfg.p_th)
    throw ThresholdOutOfRange("solve_threshold: no bracket, P_S >= p_th at eps_hi");

  double lo = cfg.eps_lo;
  double hi = cfg.eps_hi;
  CurveEval last = at_hi;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = std::sqrt(lo * hi);  // thresholds live on a log scale
    if ((hi - lo) <= cfg.rel_tol * mid) break;
    last = evaluate_first_max(n, C, mid, cfg, &res.evaluations);
    if (last.p > cfg.p_th)
      lo = mid;
    else
      hi = mid;
  }
  res.eps_th = std::sqrt(lo * hi);
  res.t1_at_threshold = last.t1;
  res.p_at_threshold = last.p;
  return res;
}

int max_qubits(double epsilon, double a, double b) {
  if (!(epsilon > 0.0)) throw std::domain_error("max_qubits: epsilon must be > 0");
  const double v = (-b - std::log(epsilon)) / (a * std::numbers::ln2);
  const int n = static_cast<int>(std::floor(v + 1e-12));
  return std::max(0, n);
}

double epsilon_max(double a, double b_min) {
  return std::exp(-b_min - a * std::numbers::ln2);
}

}  // namespace grover
