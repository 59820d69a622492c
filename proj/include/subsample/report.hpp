#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "subsample/harness.hpp"
#include "subsample/verify.hpp"

namespace subsample {

// Everything a sampling experiment needs; mirrored by the CLI flags.
struct ExperimentConfig {
  std::string graph_source;
  std::string pattern_spec;
  long long trials = 1000;
  uint64_t seed = kDefaultSeed;
  std::string xh_mode = "exact";  // "exact", "estimate", or a numeric value
  std::string format = "json";    // "json" or "csv"
  int threads = 0;
  bool include_timing = false;  // timing breaks byte-reproducibility; opt-in
};

std::string encode_instance(const CopyInstance& copy);

// The canonical machine-readable experiment report (schema in
// schemas/report.schema.json). Deterministic given (config, results):
// wall time is only present when config.include_timing is set.
nlohmann::json build_sample_report(
    const HostGraph& g, const Pattern& h, const Decomposition& t, long long f,
    const ExperimentConfig& config, double x_h_used, const std::string& method,
    const RunResult& run, const std::optional<CopySet>& copies);

nlohmann::json build_estimate_report(const HostGraph& g, const Pattern& h,
                                     const Decomposition& t, long long f,
                                     const ExperimentConfig& config,
                                     const CountEstimate& est);

nlohmann::json build_verify_exact_report(const HostGraph& g, const Pattern& h,
                                         const Decomposition& t, long long f,
                                         const ExactDistribution& dist,
                                         const CopySet& copies);

nlohmann::json build_decompose_report(const Pattern& h, const Decomposition& t,
                                      long long f);

// Flat projection of the per-copy histogram.
std::string report_to_csv(const nlohmann::json& report);

std::string dump_report(const nlohmann::json& report);

}  // namespace subsample
