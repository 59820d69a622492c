#include "subsample/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "subsample/verify.hpp"

namespace subsample {

namespace {

// "<" via oracle degree queries (two per comparison).
bool oracle_precedes(QueryOracle& oracle, int a, int b) {
  int da = oracle.degree(a);
  int db = oracle.degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

WedgeOutcome sample_wedge(QueryOracle& oracle, int u, [[maybe_unused]] int v) {
  long long two_m = oracle.two_m();
  int du = oracle.degree(u);
  if ((long long)du * du <= two_m) {
    // low-degree branch: each neighbor with probability exactly 1/sqrt(2m)
    if (du == 0) return {};
    uint64_t idx = oracle.rng().uniform_index((uint64_t)du);
    if (!oracle.rng().coin({Rational(du), +1}))  // p = d_u / sqrt(2m)
      return {};
    int w = oracle.neighbor(u, (int)idx + 1);
    return {true, w, /*adjacency_certified=*/true};
  }
  // high-degree branch: degree-proportional vertex, thinned to 1/sqrt(2m)
  int w = oracle.sample_vertex_by_degree();
  int dw = oracle.degree(w);
  if (!oracle.rng().coin({Rational(1, dw), -1}))  // p = min(1, sqrt(2m)/d_w)
    return {};
  return {true, w, /*adjacency_certified=*/false};
}

std::optional<CycleInstance> sample_odd_cycle(QueryOracle& oracle, int length,
                                              const SamplerOptions& opt) {
  if (length < 3 || length % 2 == 0)
    throw std::invalid_argument("cycle length must be odd and >= 3");
  int k = (length - 1) / 2;

  std::vector<DirectedEdge> e(k);
  for (int i = 0; i < k; ++i) e[i] = oracle.sample_directed_edge();

  WedgeOutcome wr = sample_wedge(oracle, e[0].tail, e[k - 1].head);
  if (!wr.ok) return std::nullopt;
  int u1 = e[0].tail, v1 = e[0].head, w = wr.w;

  if (!opt.skip_order_checks) {
    // u_1 must be the unique smallest vertex; w < v_1 fixes the orientation
    if (!oracle_precedes(oracle, u1, w)) return std::nullopt;
    if (!oracle_precedes(oracle, w, v1)) return std::nullopt;
    for (int i = 1; i < k; ++i) {
      if (!oracle_precedes(oracle, u1, e[i].tail)) return std::nullopt;
      if (!oracle_precedes(oracle, u1, e[i].head)) return std::nullopt;
    }
  }

  // cycle order x_0..x_{2k}: u_1, w, v_k, u_k, v_{k-1}, u_{k-1}, ..., v_1
  std::vector<int> seq;
  seq.reserve(length);
  seq.push_back(u1);
  seq.push_back(w);
  for (int i = k; i >= 2; --i) {
    seq.push_back(e[i - 1].head);
    seq.push_back(e[i - 1].tail);
  }
  seq.push_back(v1);

  std::set<int> distinct(seq.begin(), seq.end());
  if ((int)distinct.size() != length) return std::nullopt;

  // connecting edges {v_i, u_{i+1}}, then the wedge edges
  for (int i = 1; i < k; ++i)
    if (!oracle.pair(e[i - 1].head, e[i].tail)) return std::nullopt;
  if (!oracle.pair(e[k - 1].head, w)) return std::nullopt;
  if (!wr.adjacency_certified && !oracle.pair(w, u1)) return std::nullopt;

  return CycleInstance{std::move(seq)};
}

std::optional<StarInstance> sample_star(QueryOracle& oracle, int petals,
                                        const SamplerOptions& opt) {
  if (petals < 1) throw std::invalid_argument("star needs >= 1 petal");
  std::vector<DirectedEdge> e(petals);
  for (int i = 0; i < petals; ++i) e[i] = oracle.sample_directed_edge();

  for (int i = 1; i < petals; ++i)
    if (e[i].tail != e[0].tail) return std::nullopt;
  if (!opt.skip_order_checks) {
    for (int i = 0; i + 1 < petals; ++i)
      if (!oracle_precedes(oracle, e[i].head, e[i + 1].head))
        return std::nullopt;
  } else {
    // ascent implies distinct heads; keep distinctness even when mutated
    std::set<int> heads;
    for (auto& d : e) heads.insert(d.head);
    if ((int)heads.size() != petals) return std::nullopt;
  }

  StarInstance s;
  s.root = e[0].tail;
  for (auto& d : e) s.leaves.push_back(d.head);
  return s;
}

std::optional<Assembly> sample_subgraph(QueryOracle& oracle, const Pattern& h,
                                        const Decomposition& t, long long f,
                                        const SamplerOptions& opt) {
  if (f < 1) throw std::invalid_argument("configuration count must be >= 1");

  std::vector<CycleInstance> cycles;
  for (const auto& piece : t.cycles) {
    auto c = sample_odd_cycle(oracle, piece.length(), opt);
    if (!c) return std::nullopt;
    cycles.push_back(std::move(*c));
  }
  std::vector<StarInstance> stars;
  for (const auto& piece : t.stars) {
    auto s = sample_star(oracle, piece.petals(), opt);
    if (!s) return std::nullopt;
    stars.push_back(std::move(*s));
  }

  std::set<int> verts;
  for (const auto& c : cycles) verts.insert(c.vertices.begin(), c.vertices.end());
  for (const auto& s : stars) {
    verts.insert(s.root);
    verts.insert(s.leaves.begin(), s.leaves.end());
  }
  if ((int)verts.size() != h.n()) return std::nullopt;

  std::vector<int> vs(verts.begin(), verts.end());
  std::map<std::pair<int, int>, bool> adj;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      adj[{vs[i], vs[j]}] = oracle.pair(vs[i], vs[j]);
  auto has_edge = [&adj](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = adj.find({a, b});
    return it != adj.end() && it->second;
  };

  auto copy = realize_copy(h, t, cycles, stars, has_edge);
  if (!copy) return std::nullopt;

  if (!opt.skip_config_coin && !oracle.rng().coin({Rational(1, f), 0}))
    return std::nullopt;
  return Assembly{std::move(*copy), std::move(cycles), std::move(stars)};
}

long long wrapper_budget(long long two_m, const Rational& rho, double x_h) {
  if (x_h <= 0) throw std::invalid_argument("x_h must be positive");
  double q = 10.0 * std::pow((double)two_m, rho.to_double()) / x_h;
  return (long long)std::ceil(q);
}

std::optional<CopyInstance> sample_subgraph_uniformly(
    QueryOracle& oracle, const Pattern& h, const Decomposition& t, long long f,
    double x_h, const SamplerOptions& opt) {
  long long q = wrapper_budget(oracle.two_m(), t.rho_total, x_h);
  for (long long j = 0; j < q; ++j) {
    auto a = sample_subgraph(oracle, h, t, f, opt);
    if (a) return a->copy;
  }
  return std::nullopt;
}

std::optional<CopyInstance> full_scan_sample(QueryOracle& oracle,
                                             const Pattern& h) {
  int n = oracle.n();
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    int d = oracle.degree(v);
    for (int i = 1; i <= d; ++i) {
      int w = oracle.neighbor(v, i);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  HostGraph local = HostGraph::from_edges(n, std::move(edges));
  CopySet copies = enumerate_copies(local, h);
  if (copies.copies.empty()) return std::nullopt;
  uint64_t pick = oracle.rng().uniform_index(copies.copies.size());
  return copies.copies[pick];
}

long long per_call_query_bound(const Pattern& h, const Decomposition& t) {
  long long cycle_edges = 0;
  for (const auto& c : t.cycles) cycle_edges += c.length();
  long long pieces = (long long)t.cycles.size() + (long long)t.stars.size();
  return 6 * cycle_edges + pieces + (long long)h.n() * h.n() + 4LL * h.n();
}

}  // namespace subsample
