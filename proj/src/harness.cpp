#include "subsample/harness.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace subsample {

namespace {

struct TrialAccumulator {
  long long successes = 0;
  std::map<CopyInstance, long long> histogram;
  QueryStats stats;
  long long max_trial_queries = 0;
  bool within_cap = true;

  void merge(const TrialAccumulator& o) {
    successes += o.successes;
    for (const auto& [copy, cnt] : o.histogram) histogram[copy] += cnt;
    stats += o.stats;
    max_trial_queries = std::max(max_trial_queries, o.max_trial_queries);
    within_cap = within_cap && o.within_cap;
  }
};

void run_one_trial(const HostGraph& g, const Pattern& h, const Decomposition& t,
                   long long f, const RunConfig& config, long long trial,
                   long long trial_query_cap, TrialAccumulator& acc) {
  ConcreteDriver driver(g.two_m(),
                        RandomSource(config.seed, config.stream_base + trial));
  QueryOracle oracle(g, driver);
  std::optional<CopyInstance> copy;
  switch (config.mode) {
    case RunMode::kSingleShot: {
      auto a = sample_subgraph(oracle, h, t, f, config.opts);
      if (a) copy = a->copy;
      break;
    }
    case RunMode::kWrapper:
      copy = sample_subgraph_uniformly(oracle, h, t, f, config.x_h, config.opts);
      break;
    case RunMode::kFullScan:
      copy = full_scan_sample(oracle, h);
      break;
  }
  if (copy) {
    ++acc.successes;
    ++acc.histogram[*copy];
  }
  acc.stats += oracle.stats();
  long long q = oracle.stats().total();
  acc.max_trial_queries = std::max(acc.max_trial_queries, q);
  if (q > trial_query_cap) acc.within_cap = false;
}

RunResult finalize(const HostGraph& g, const Pattern& h, const Decomposition& t,
                   const RunConfig& config, TrialAccumulator acc,
                   long long trial_query_cap, double wall_seconds) {
  RunResult r;
  r.trials = config.trials;
  r.successes = acc.successes;
  r.histogram = std::move(acc.histogram);
  r.total_stats = acc.stats;
  r.per_call_bound = per_call_query_bound(h, t);
  r.trial_query_cap = trial_query_cap;
  r.max_trial_queries = acc.max_trial_queries;
  r.all_trials_within_cap = acc.within_cap;
  r.wall_seconds = wall_seconds;
  (void)g;
  (void)t;
  return r;
}

long long compute_trial_cap(const HostGraph& g, const Pattern& h,
                            const Decomposition& t, const RunConfig& config) {
  long long bound = per_call_query_bound(h, t);
  if (config.mode == RunMode::kWrapper)
    return wrapper_budget(g.two_m(), t.rho_total, config.x_h) * bound;
  if (config.mode == RunMode::kFullScan) return g.n() + g.two_m();
  return bound;
}

}  // namespace

RunResult run_trials_reference(const HostGraph& g, const Pattern& h,
                               const Decomposition& t, long long f,
                               const RunConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  long long cap = compute_trial_cap(g, h, t, config);
  auto t0 = std::chrono::steady_clock::now();
  TrialAccumulator acc;
  for (long long trial = 0; trial < config.trials; ++trial)
    run_one_trial(g, h, t, f, config, trial, cap, acc);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return finalize(g, h, t, config, std::move(acc), cap, secs);
}

RunResult run_trials(const HostGraph& g, const Pattern& h,
                     const Decomposition& t, long long f,
                     const RunConfig& config) {
  if (config.threads <= 1) return run_trials_reference(g, h, t, f, config);
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  long long cap = compute_trial_cap(g, h, t, config);
  auto t0 = std::chrono::steady_clock::now();
  TrialAccumulator acc;
#ifdef _OPENMP
#pragma omp parallel num_threads(config.threads)
  {
    TrialAccumulator local;
#pragma omp for schedule(static) nowait
    for (long long trial = 0; trial < config.trials; ++trial)
      run_one_trial(g, h, t, f, config, trial, cap, local);
#pragma omp critical
    acc.merge(local);
  }
#else
  for (long long trial = 0; trial < config.trials; ++trial)
    run_one_trial(g, h, t, f, config, trial, cap, acc);
#endif
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return finalize(g, h, t, config, std::move(acc), cap, secs);
}

CountEstimate estimate_count(const HostGraph& g, const Pattern& h,
                             const Decomposition& t, long long f,
                             long long trials, uint64_t seed, int threads) {
  RunConfig config;
  config.trials = trials;
  config.seed = seed;
  config.threads = threads;
  config.mode = RunMode::kSingleShot;
  RunResult r = run_trials(g, h, t, f, config);

  CountEstimate e;
  e.trials = trials;
  e.successes = r.successes;
  double scale = std::pow((double)g.two_m(), t.rho_total.to_double());
  double p = (double)r.successes / (double)trials;
  e.estimate = p * scale;
  e.ci_halfwidth = 1.96 * std::sqrt(p * (1 - p) / (double)trials) * scale;
  return e;
}

}  // namespace subsample
