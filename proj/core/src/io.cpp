#include "grover/io.hpp"

#include <bit>
#include <cstdio>

#include "json.hpp"

namespace grover {

namespace {

using nlohmann::json;

json provenance_json(const Provenance& prov) {
  json j;
  j["tool"] = kToolVersion;
  j["generator"] = RandomStream::kGeneratorName;
  j["seed"] = prov.master_seed;
  for (const auto& [k, v] : prov.fields) j[k] = v;
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

void Provenance::set(const std::string& key, double value) {
  fields[key] = format_double(value);
}

void Provenance::set(const std::string& key, long value) {
  fields[key] = std::to_string(value);
}

void write_csv_provenance(std::ostream& os, const Provenance& prov) {
  os << "# tool=" << kToolVersion << "\n";
  os << "# generator=" << RandomStream::kGeneratorName << "\n";
  os << "# seed=" << prov.master_seed << "\n";
  for (const auto& [k, v] : prov.fields) os << "# " << k << "=" << v << "\n";
}

void write_success_curve_csv(std::ostream& os, const SuccessCurve& curve,
                             const Provenance& prov) {
  write_csv_provenance(os, prov);
  os << "t,p,stderr,n,epsilon,gamma,seed,n_traj\n";
  for (int t = 0; t <= curve.max_t(); ++t) {
    os << t << "," << format_double(curve.p_success[t]) << ","
       << format_double(curve.std_err[t]) << "," << curve.n << ","
       << format_double(curve.params.epsilon) << ","
       << format_double(curve.params.gamma) << "," << curve.master_seed << ","
       << curve.n_trajectories << "\n";
  }
}

std::string success_curve_json(const SuccessCurve& curve, const Provenance& prov) {
  json j;
  j["provenance"] = provenance_json(prov);
  j["n"] = curve.n;
  j["epsilon"] = curve.params.epsilon;
  j["gamma"] = curve.params.gamma;
  j["n_traj"] = curve.n_trajectories;
  j["seed"] = curve.master_seed;
  j["p"] = curve.p_success;
  j["stderr"] = curve.std_err;
  return j.dump(2) + "\n";
}

void write_histograms_csv(std::ostream& os, const std::vector<WeightHistogram>& hists,
                          const Provenance& prov) {
  write_csv_provenance(os, prov);
  os << "t,state,weight,mean_sq,stderr\n";
  for (const auto& h : hists) {
    for (std::size_t x = 0; x < h.mean_sq.size(); ++x) {
      const int w = std::popcount(x);
      os << h.t << "," << x << "," << w << "," << format_double(h.mean_sq[x]) << ","
         << format_double(h.std_err[x]) << "\n";
    }
  }
}

std::string histograms_json(const std::vector<WeightHistogram>& hists,
                            const Provenance& prov) {
  json j;
  j["provenance"] = provenance_json(prov);
  j["histograms"] = json::array();
  for (const auto& h : hists) {
    json e;
    e["t"] = h.t;
    e["n"] = h.n;
    e["mean_sq"] = h.mean_sq;
    e["stderr"] = h.std_err;
    e["weight_mean"] = h.weight_mean;
    j["histograms"].push_back(e);
  }
  return j.dump(2) + "\n";
}

void write_thresholds_csv(std::ostream& os, double C,
                          const std::vector<ThresholdPoint>& points,
                          const Provenance& prov) {
  write_csv_provenance(os, prov);
  os << "n,C,eps_th,t1,p_at_threshold\n";
  for (const auto& p : points) {
    os << p.n << "," << format_double(C) << "," << format_double(p.eps_th) << ","
       << p.t1 << "," << format_double(p.p_at_threshold) << "\n";
  }
}

std::string threshold_law_json(double C, const std::vector<ThresholdPoint>& points,
                               const ThresholdFit& fit, const Provenance& prov) {
  json j;
  j["provenance"] = provenance_json(prov);
  j["C"] = C;
  j["points"] = json::array();
  for (const auto& p : points)
    j["points"].push_back({{"n", p.n}, {"eps_th", p.eps_th}, {"t1", p.t1}});
  j["a"] = fit.a;
  j["b"] = fit.b;
  j["cov"] = {{"aa", fit.cov_aa}, {"ab", fit.cov_ab}, {"bb", fit.cov_bb}};
  j["r2"] = fit.r2;
  return j.dump(2) + "\n";
}

std::string damping_fit_json(const DampingFit& fit, int n, const NoiseParams& params,
                             const Provenance& prov) {
  json j;
  j["provenance"] = provenance_json(prov);
  j["n"] = n;
  j["epsilon"] = params.epsilon;
  j["gamma"] = params.gamma;
  j["A"] = fit.A;
  j["lambda"] = fit.lambda;
  j["lambda_model"] = lambda_model(params.epsilon, params.gamma, n);
  j["baseline"] = fit.baseline;
  j["residual_rms_ln"] = fit.residual_rms;
  j["maxima"] = json::array();
  for (const auto& [t, p] : fit.points_used) j["maxima"].push_back({{"t", t}, {"p", p}});
  return j.dump(2) + "\n";
}

void write_encoded_csv(std::ostream& os,
                       const std::vector<EncodedExperimentResult>& rows,
                       const Provenance& prov) {
  write_csv_provenance(os, prov);
  os << "epsilon,gamma,C,encoded_ps,encoded_stderr,bare_ps,bare_stderr,"
        "mean_attempts,n_traj,seed\n";
  for (const auto& r : rows) {
    os << format_double(r.epsilon) << "," << format_double(r.gamma) << ","
       << format_double(r.C) << "," << format_double(r.encoded_ps) << ","
       << format_double(r.encoded_stderr) << "," << format_double(r.bare_ps) << ","
       << format_double(r.bare_stderr) << "," << format_double(r.mean_attempts) << ","
       << r.n_trajectories << "," << r.master_seed << "\n";
  }
}

}  // namespace grover
