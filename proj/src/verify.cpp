#include "subsample/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "subsample/enumeration.hpp"
#include "subsample/harness.hpp"
#include "subsample/oracle.hpp"

namespace subsample {

// ---------------------------------------------------------------------------
// Brute-force copy enumeration
// ---------------------------------------------------------------------------

namespace {

// H-vertex visit order: BFS within each component so all but the first
// vertex of a component extend an already-mapped neighbor.
std::vector<int> embedding_order(const Pattern& h) {
  std::vector<int> order;
  std::vector<bool> seen(h.n(), false);
  for (int s = 0; s < h.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> queue{s};
    seen[s] = true;
    for (size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      order.push_back(v);
      for (int w : h.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
  }
  return order;
}

}  // namespace

CopySet enumerate_copies(const HostGraph& g, const Pattern& h) {
  if (h.n() > 8) throw std::invalid_argument("enumerate_copies: |V_H| > 8");
  if (g.n() > 40) throw std::invalid_argument("enumerate_copies: n > 40");

  std::vector<int> order = embedding_order(h);
  std::vector<int> map(h.n(), -1);
  std::vector<bool> used(g.n(), false);
  std::set<CopyInstance> copies;

  std::function<void(size_t)> extend = [&](size_t depth) {
    if (depth == order.size()) {
      CopyInstance copy;
      for (auto [u, v] : h.edges()) {
        int a = map[u], b = map[v];
        copy.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(copy.begin(), copy.end());
      copies.insert(std::move(copy));
      return;
    }
    int hv = order[depth];
    // candidates: neighbors of an already-mapped H-neighbor if one exists
    std::vector<int> candidates;
    int anchor = -1;
    for (int w : h.neighbors(hv))
      if (map[w] >= 0) {
        anchor = map[w];
        break;
      }
    if (anchor >= 0)
      candidates = g.neighbors(anchor);
    else {
      candidates.resize(g.n());
      for (int v = 0; v < g.n(); ++v) candidates[v] = v;
    }
    for (int gv : candidates) {
      if (used[gv]) continue;
      bool ok = true;
      for (int w : h.neighbors(hv))
        if (map[w] >= 0 && !g.has_edge(gv, map[w])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map[hv] = gv;
      used[gv] = true;
      extend(depth + 1);
      used[gv] = false;
      map[hv] = -1;
    }
  };
  extend(0);

  CopySet out;
  out.copies.assign(copies.begin(), copies.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact symbolic distribution
// ---------------------------------------------------------------------------

namespace {

std::string encode_configuration(const Assembly& a) {
  std::string key;
  for (const auto& c : a.cycles) {
    key += "C(";
    for (int v : c.vertices) key += std::to_string(v) + ",";
    key += ")";
  }
  for (const auto& s : a.stars) {
    key += "S(" + std::to_string(s.root) + ";";
    for (int v : s.leaves) key += std::to_string(v) + ",";
    key += ")";
  }
  return key;
}

}  // namespace

ExactDistribution exact_distribution(const HostGraph& g, const Pattern& h,
                                     const Decomposition& t, long long f,
                                     const SamplerOptions& opt) {
  if (g.two_m() > 40)
    throw std::invalid_argument("exact_distribution: 2m > 40");
  long long sampled_edges = 0;
  for (const auto& c : t.cycles) sampled_edges += (c.length() - 1) / 2;
  for (const auto& s : t.stars) sampled_edges += s.petals();
  double transcripts = std::pow((double)g.two_m(), (double)sampled_edges);
  if (transcripts > 1e8)
    throw std::invalid_argument("exact_distribution: transcript count > 1e8");

  EnumerationDriver driver(g.two_m());
  ExactDistribution dist;
  std::map<CopyInstance, std::set<std::string>> classes;

  bool more = true;
  while (more) {
    driver.begin_run();
    QueryOracle oracle(g, driver);
    auto assembly = sample_subgraph(oracle, h, t, f, opt);
    ++dist.paths_explored;
    if (dist.paths_explored > 200000000)
      throw std::runtime_error("exact_distribution: path explosion");
    if (assembly) {
      if (driver.path_has_reject())
        throw std::logic_error("accepting path crosses a rejected coin");
      HalfPowerProb p = driver.path_probability();
      auto it = dist.per_instance.find(assembly->copy);
      if (it == dist.per_instance.end())
        dist.per_instance.emplace(assembly->copy, p);
      else
        it->second = it->second.plus(p, g.two_m());
      classes[assembly->copy].insert(encode_configuration(*assembly));
    }
    more = driver.advance();
  }
  for (auto& [copy, keys] : classes)
    dist.accepting_classes[copy] = (long long)keys.size();
  for (auto& [copy, p] : dist.per_instance) p = p.normalized(g.two_m());
  return dist;
}

// ---------------------------------------------------------------------------
// Statistical utilities
// ---------------------------------------------------------------------------

UniformityReport uniformity_test(const std::vector<long long>& per_copy_counts,
                                 long long trials) {
  if (per_copy_counts.size() < 2)
    throw std::invalid_argument("uniformity_test: need >= 2 copies");
  long long total = 0;
  for (long long c : per_copy_counts) total += c;

  UniformityReport r;
  r.df = (int)per_copy_counts.size() - 1;
  r.undersampled = trials < 100 * (long long)per_copy_counts.size();
  if (total == 0) {
    r.p_value = 1;
    return r;
  }
  double expected = (double)total / (double)per_copy_counts.size();
  double uniform = 1.0 / (double)per_copy_counts.size();
  for (long long c : per_copy_counts) {
    double d = (double)c - expected;
    r.chi_square += d * d / expected;
    r.tv_distance += std::abs((double)c / (double)total - uniform);
  }
  r.tv_distance *= 0.5;
  boost::math::chi_squared dist(r.df);
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.chi_square));
  return r;
}

SuccessRateReport success_rate_check(const HostGraph& g, const Pattern& h,
                                     long long trials, uint64_t seed,
                                     int threads) {
  if (trials < 10000)
    throw std::invalid_argument("success_rate_check: trials < 1e4");
  Decomposition t = decompose(h);
  long long f = count_configurations(h, t);

  SuccessRateReport r;
  r.copies = enumerate_copies(g, h).count();
  r.target = (double)r.copies /
             std::pow((double)g.two_m(), t.rho_total.to_double());

  RunConfig config;
  config.trials = trials;
  config.seed = seed;
  config.threads = threads;
  RunResult run = run_trials(g, h, t, f, config);
  r.observed = (double)run.successes / (double)trials;
  r.sigma = std::sqrt(r.target * (1 - r.target) / (double)trials);
  r.within_band = std::abs(r.observed - r.target) <= 4 * r.sigma ||
                  (r.target == 0 && run.successes == 0);
  return r;
}

}  // namespace subsample
