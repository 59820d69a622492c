#pragma once

#include <cstdint>
#include <map>

#include "subsample/graph.hpp"
#include "subsample/pattern.hpp"
#include "subsample/sampler.hpp"

namespace subsample {

inline constexpr uint64_t kDefaultSeed = 12345;

enum class RunMode {
  kSingleShot,  // one sample_subgraph call per trial
  kWrapper,     // one sample_subgraph_uniformly run per trial
  kFullScan     // one full_scan_sample call per trial
};

struct RunConfig {
  long long trials = 1;
  uint64_t seed = kDefaultSeed;
  uint64_t stream_base = 0;  // trial t uses stream stream_base + t
  int threads = 0;           // 0 or 1 = serial; >1 = OpenMP worker count
  RunMode mode = RunMode::kSingleShot;
  double x_h = 0;  // wrapper mode only
  SamplerOptions opts;
};

struct RunResult {
  long long trials = 0;
  long long successes = 0;
  std::map<CopyInstance, long long> histogram;
  QueryStats total_stats;
  long long per_call_bound = 0;    // affine bound for one sample_subgraph
  long long trial_query_cap = 0;   // per-trial ceiling (q * bound in wrapper mode)
  long long max_trial_queries = 0;
  bool all_trials_within_cap = true;
  double wall_seconds = 0;  // not part of any determinism contract
};

// OpenMP trial runner. Trial t owns RNG stream stream_base+t and private
// query counters, so the aggregate is identical for any thread count and
// bit-identical to run_trials_reference.
RunResult run_trials(const HostGraph& g, const Pattern& h,
                     const Decomposition& t, long long f,
                     const RunConfig& config);

// Plain serial loop, kept as the reference implementation for testing and
// benchmarking against the parallel runner.
RunResult run_trials_reference(const HostGraph& g, const Pattern& h,
                               const Decomposition& t, long long f,
                               const RunConfig& config);

struct CountEstimate {
  long long trials = 0;
  long long successes = 0;
  double estimate = 0;       // (successes/trials) * (2m)^rho
  double ci_halfwidth = 0;   // 1.96 sigma, normal approximation
};

// Success-rate estimator for #H: principled by the per-trial success
// probability #H/(2m)^rho of the rejection sampler.
CountEstimate estimate_count(const HostGraph& g, const Pattern& h,
                             const Decomposition& t, long long f,
                             long long trials, uint64_t seed, int threads);

}  // namespace subsample
