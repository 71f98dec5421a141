#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grover/mc.hpp"

namespace grover {

// Fitted decay-rate model lambda(eps, gamma, n) = (c1 eps + c2 gamma) n
// - c3 eps - c4 gamma, adopted with its published coefficients.
double lambda_model(double epsilon, double gamma, int n);

// Local maxima of a success curve. t qualifies when P(t) >= P(t-1) and
// P(t) >= P(t+1); a plateau reports its smallest t; t = 0 and the final
// point never qualify.
std::vector<std::pair<int, double>> find_maxima(const std::vector<double>& p);

struct DampingFit {
  double A = 0.0;
  double lambda = 0.0;
  double baseline = 0.0;  // 1/2^n, fixed
  double residual_rms = 0.0;  // in ln-space
  std::vector<std::pair<int, double>> points_used;
};

// Weighted least squares of ln(P - 1/2^n) on t over the curve maxima.
// Pass empty std_errs for an unweighted fit. Maxima at or below the
// baseline are dropped; fewer than 3 surviving points is an error.
DampingFit fit_damping(const std::vector<std::pair<int, double>>& maxima, int n,
                       const std::vector<double>& std_errs = {});

// Smallest-t local maximum. Throws if the curve has none.
std::pair<int, double> first_maximum(const std::vector<double>& p);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double cov_ss = 0.0;
  double cov_si = 0.0;
  double cov_ii = 0.0;
  double r2 = 0.0;
};

LinearFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys);

struct ThresholdFit {
  double a = 0.0;  // slope magnitude of -a ln N - b
  double b = 0.0;
  double cov_aa = 0.0;
  double cov_ab = 0.0;
  double cov_bb = 0.0;
  double r2 = 0.0;
};

// OLS of ln(eps_th) on ln N = n ln 2 for the law ln eps_th = -a ln N - b.
ThresholdFit fit_threshold_law(const std::vector<std::pair<int, double>>& thresholds);

class ThresholdOutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThresholdSolveConfig {
  double p_th = 0.5;
  double eps_lo = 1e-6;
  double eps_hi = 0.2;
  double rel_tol = 0.02;  // relative bracket width at termination
  long nc_floor = 10000;
  long nc_cap = 100000;
  std::uint64_t master_seed = 0;
  int workers = 0;
  MemoryMode mode = MemoryMode::Additive;
};

struct ThresholdResult {
  double eps_th = 0.0;
  int t1_at_threshold = 0;
  double p_at_threshold = 0.0;
  long evaluations = 0;
};

// Bisection on eps at fixed C = eps/gamma for P_S(first maximum) = p_th.
// Each evaluation re-locates the first maximum of its own curve and
// escalates the trajectory count (up to nc_cap) while the estimate is
// statistically indistinguishable from p_th.
ThresholdResult solve_threshold(int n, double C, const ThresholdSolveConfig& cfg);

// Largest n with e^{-a n ln2 - b} >= eps; clamped below at 0.
int max_qubits(double epsilon, double a, double b);

// Absolute threshold e^{-b_min - a ln 2}.
double epsilon_max(double a, double b_min);

}  // namespace grover
