#include "subsample/generators.hpp"

#include <stdexcept>

#include "subsample/rng.hpp"

namespace subsample {

HostGraph make_complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return HostGraph::from_edges(n, std::move(e));
}

HostGraph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return HostGraph::from_edges(n, std::move(e));
}

HostGraph make_star(int petals) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= petals; ++v) e.emplace_back(0, v);
  return HostGraph::from_edges(petals + 1, std::move(e));
}

HostGraph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return HostGraph::from_edges(n, std::move(e));
}

HostGraph make_erdos_renyi(int n, double p, uint64_t seed) {
  RandomSource src(seed, /*stream=*/0);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (src.uniform_double() < p) e.emplace_back(u, v);
  return HostGraph::from_edges(n, std::move(e));
}

HostGraph make_lollipop(int clique, int tail) {
  if (clique < 1) throw std::invalid_argument("lollipop needs a clique");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) e.emplace_back(u, v);
  int prev = 0;
  for (int i = 0; i < tail; ++i) {
    int next = clique + i;
    e.emplace_back(prev, next);
    prev = next;
  }
  return HostGraph::from_edges(clique + tail, std::move(e));
}

HostGraph disjoint_union(const HostGraph& a, const HostGraph& b) {
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.n(), v + a.n());
  return HostGraph::from_edges(a.n() + b.n(), std::move(e));
}

}  // namespace subsample
