#pragma once

#include <optional>

#include "subsample/oracle.hpp"
#include "subsample/pattern.hpp"

namespace subsample {

// Mutation switches for verifying that the exact-distribution check has
// teeth. Both default to off; production callers never set them.
struct SamplerOptions {
  bool skip_config_coin = false;   // drop the 1/f acceptance coin
  bool skip_order_checks = false;  // drop the vertex-order conditions
};

struct WedgeOutcome {
  bool ok = false;
  int w = -1;
  // true when w was fetched as a neighbor of u, certifying the edge {u, w}
  bool adjacency_certified = false;
};

// Apex of a prospective wedge at u: every eligible vertex comes back with
// probability exactly 1/sqrt(2m). The result is not guaranteed adjacent to
// u or v; callers verify. v is unused, kept for signature parity with the
// cycle sampler's call site.
WedgeOutcome sample_wedge(QueryOracle& oracle, int u, int v);

// Each instance of C_{2k+1} in the host comes back with probability exactly
// (2m)^-(k+1/2); everything else fails. Adjacency of connecting edges is
// verified here with pair queries so the operation stands alone.
std::optional<CycleInstance> sample_odd_cycle(QueryOracle& oracle, int length,
                                              const SamplerOptions& opt = {});

// Each rooted instance of S_k comes back with probability exactly (2m)^-k.
// Issues no pair queries.
std::optional<StarInstance> sample_star(QueryOracle& oracle, int petals,
                                        const SamplerOptions& opt = {});

struct Assembly {
  CopyInstance copy;  // canonical edge list of the sampled copy of H
  std::vector<CycleInstance> cycles;
  std::vector<StarInstance> stars;
};

// One rejection trial: every instance of H in the host comes back with
// probability exactly (2m)^-rho(H). f must equal count_configurations(h, t).
std::optional<Assembly> sample_subgraph(QueryOracle& oracle, const Pattern& h,
                                        const Decomposition& t, long long f,
                                        const SamplerOptions& opt = {});

// ceil(10 * (2m)^rho / x_h), the trial budget of the wrapper.
long long wrapper_budget(long long two_m, const Rational& rho, double x_h);

// Up to wrapper_budget trials; first success wins. Conditioned on success
// the returned copy is uniform over all instances of H.
std::optional<CopyInstance> sample_subgraph_uniformly(
    QueryOracle& oracle, const Pattern& h, const Decomposition& t, long long f,
    double x_h, const SamplerOptions& opt = {});

// Fallback for dense-answer regimes: reconstructs the host with n degree
// queries plus 2m neighbor queries, enumerates copies locally and draws one
// uniformly. Fails only when #H = 0.
std::optional<CopyInstance> full_scan_sample(QueryOracle& oracle,
                                             const Pattern& h);

// Generous affine per-call query ceiling for sample_subgraph:
// 6*|E(cycle pieces)| + #pieces + |V_H|^2 + 4*|V_H|.
long long per_call_query_bound(const Pattern& h, const Decomposition& t);

}  // namespace subsample
