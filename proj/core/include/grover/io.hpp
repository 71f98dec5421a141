#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "grover/analysis.hpp"
#include "grover/mc.hpp"
#include "grover/steane.hpp"

namespace grover {

inline constexpr const char* kToolVersion = "groverlab 0.1.0";

// Run metadata stamped into every output file so a result can re-run
// itself: parameters, seed, generator name, tool version.
struct Provenance {
  std::uint64_t master_seed = 0;
  std::map<std::string, std::string> fields;  // ordered, deterministic

  void set(const std::string& key, const std::string& value) { fields[key] = value; }
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
};

std::string format_double(double v);

// "# key=value" header lines.
void write_csv_provenance(std::ostream& os, const Provenance& prov);

void write_success_curve_csv(std::ostream& os, const SuccessCurve& curve,
                             const Provenance& prov);
std::string success_curve_json(const SuccessCurve& curve, const Provenance& prov);

void write_histograms_csv(std::ostream& os, const std::vector<WeightHistogram>& hists,
                          const Provenance& prov);
std::string histograms_json(const std::vector<WeightHistogram>& hists,
                            const Provenance& prov);

struct ThresholdPoint {
  int n = 0;
  double eps_th = 0.0;
  int t1 = 0;
  double p_at_threshold = 0.0;
};

void write_thresholds_csv(std::ostream& os, double C,
                          const std::vector<ThresholdPoint>& points,
                          const Provenance& prov);
std::string threshold_law_json(double C, const std::vector<ThresholdPoint>& points,
                               const ThresholdFit& fit, const Provenance& prov);

std::string damping_fit_json(const DampingFit& fit, int n, const NoiseParams& params,
                             const Provenance& prov);

void write_encoded_csv(std::ostream& os,
                       const std::vector<EncodedExperimentResult>& rows,
                       const Provenance& prov);

}  // namespace grover
