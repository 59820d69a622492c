#pragma once

#include "subsample/graph.hpp"
#include "subsample/rng.hpp"

namespace subsample {

struct QueryStats {
  long long degree_queries = 0;
  long long neighbor_queries = 0;
  long long pair_queries = 0;
  long long edge_sample_queries = 0;
  long long vertex_sample_queries = 0;

  long long total() const {
    return degree_queries + neighbor_queries + pair_queries +
           edge_sample_queries + vertex_sample_queries;
  }

  QueryStats& operator+=(const QueryStats& o) {
    degree_queries += o.degree_queries;
    neighbor_queries += o.neighbor_queries;
    pair_queries += o.pair_queries;
    edge_sample_queries += o.edge_sample_queries;
    vertex_sample_queries += o.vertex_sample_queries;
    return *this;
  }
};

// The augmented general graph model: the only path from the samplers to the
// host graph. Every call meters exactly one counter by exactly 1.
class QueryOracle {
 public:
  QueryOracle(const HostGraph& g, RandomDriver& rng) : g_(&g), rng_(&rng) {}

  // n and m are public knowledge in this model.
  int n() const { return g_->n(); }
  long long m() const { return g_->m(); }
  long long two_m() const { return g_->two_m(); }

  int degree(int v) {
    require_vertex(v);
    ++stats_.degree_queries;
    return g_->degree(v);
  }

  // 1-based index; i > d_v is a caller error, not a fail outcome.
  int neighbor(int v, int i) {
    require_vertex(v);
    if (i < 1 || i > g_->degree(v))
      throw std::out_of_range("neighbor index out of range");
    ++stats_.neighbor_queries;
    return g_->neighbor(v, i);
  }

  bool pair(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("pair query on equal vertices");
    ++stats_.pair_queries;
    return g_->has_edge(u, v);
  }

  // Uniform over the 2m directed edges: one uniform undirected edge plus a
  // fair orientation coin, at the cost of a single edge-sample query.
  DirectedEdge sample_directed_edge() {
    if (m() == 0) throw std::logic_error("edge sample on empty graph");
    ++stats_.edge_sample_queries;
    uint64_t idx = rng_->uniform_index((uint64_t)two_m());
    auto [u, v] = g_->edges()[idx / 2];
    return idx % 2 == 0 ? DirectedEdge{u, v} : DirectedEdge{v, u};
  }

  // Vertex w with probability d_w/(2m): the head of one uniform directed
  // edge. Costs exactly one edge-sample query.
  int sample_vertex_by_degree() { return sample_directed_edge().head; }

  // Part of the model but never used by the samplers; exists so the
  // "vertex_sample_queries stays 0" invariant is observable.
  int sample_uniform_vertex() {
    if (n() == 0) throw std::logic_error("vertex sample on empty graph");
    ++stats_.vertex_sample_queries;
    return (int)rng_->uniform_index((uint64_t)n());
  }

  const QueryStats& stats() const { return stats_; }
  void reset_stats() { stats_ = QueryStats{}; }

  RandomDriver& rng() { return *rng_; }

 private:
  void require_vertex(int v) const {
    if (!g_->valid_vertex(v)) throw std::out_of_range("invalid vertex id");
  }

  const HostGraph* g_;
  RandomDriver* rng_;
  QueryStats stats_;
};

}  // namespace subsample
