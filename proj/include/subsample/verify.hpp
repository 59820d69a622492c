#pragma once

#include <map>
#include <vector>

#include "subsample/graph.hpp"
#include "subsample/halfpower.hpp"
#include "subsample/pattern.hpp"
#include "subsample/sampler.hpp"

namespace subsample {

struct CopySet {
  std::vector<CopyInstance> copies;  // sorted, duplicate-free
  long long count() const { return (long long)copies.size(); }
};

// Ground-truth oracle: all copies of H in G by brute-force embedding search,
// deduplicated modulo automorphisms of H (instance identity = edge set).
// Desk-scale caps: |V_H| <= 8, n <= 40.
CopySet enumerate_copies(const HostGraph& g, const Pattern& h);

struct ExactDistribution {
  std::map<CopyInstance, HalfPowerProb> per_instance;
  // distinct accepting transcript classes per instance; equals f_T(H) when
  // the sampler is unmutated
  std::map<CopyInstance, long long> accepting_classes;
  long long paths_explored = 0;
};

// Runs the real sampler code under an enumerating random driver, visiting
// every discrete transcript, and accumulates the exact symbolic probability
// of each returned instance. This is the literal check of the per-instance
// (2m)^-rho(H) guarantee.
ExactDistribution exact_distribution(const HostGraph& g, const Pattern& h,
                                     const Decomposition& t, long long f,
                                     const SamplerOptions& opt = {});

struct UniformityReport {
  double chi_square = 0;
  int df = 0;
  double p_value = 1;
  double tv_distance = 0;
  bool undersampled = false;  // fewer than 100 successes per copy
};

// Chi-square goodness of fit of per-copy counts against the uniform
// multinomial, plus empirical total-variation distance.
UniformityReport uniformity_test(const std::vector<long long>& per_copy_counts,
                                 long long trials);

struct SuccessRateReport {
  double target = 0;    // #H / (2m)^rho
  double observed = 0;
  double sigma = 0;     // binomial standard deviation of the observed rate
  bool within_band = false;  // |observed - target| <= 4 sigma
  long long copies = 0;
};

SuccessRateReport success_rate_check(const HostGraph& g, const Pattern& h,
                                     long long trials, uint64_t seed,
                                     int threads = 0);

}  // namespace subsample
