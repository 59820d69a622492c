#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subsample {

struct DirectedEdge {
  int tail = -1;
  int head = -1;
  bool operator==(const DirectedEdge&) const = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line(line) {}
  int line;
};

// Immutable simple undirected graph. Adjacency lists keep edge-insertion
// order, so the i-th neighbor of a vertex is stable across queries.
class HostGraph {
 public:
  // Edge-list text: one "u v" pair per line, '#' comments ignored.
  // An optional "# n=<N>" line declares trailing isolated vertices.
  static HostGraph load(std::string_view text);
  static HostGraph load_file(const std::string& path);
  static HostGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  long long m() const { return (long long)edges_.size(); }
  long long two_m() const { return 2 * m(); }

  int degree(int v) const { return (int)adj_[v].size(); }
  // 1-based adjacency index, 1 <= i <= degree(v).
  int neighbor(int v, int i) const { return adj_[v][i - 1]; }
  bool has_edge(int u, int v) const;
  bool valid_vertex(int v) const { return v >= 0 && v < n_; }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  // The "<" of the total vertex order: smaller degree first, ties broken by
  // numeric vertex id.
  bool precedes(int u, int v) const {
    int du = degree(u), dv = degree(v);
    if (du != dv) return du < dv;
    return u < v;
  }

  std::vector<int> larger_neighbors(int v) const;

  std::string to_edge_list_text() const;

 private:
  HostGraph() = default;

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> sorted_adj_;  // for has_edge lookups
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace subsample
