#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subsample/rational.hpp"

namespace subsample {

// The target subgraph H. Small by construction: decomposition search is
// exhaustive and capped at 10 vertices / 15 edges.
class Pattern {
 public:
  static constexpr int kMaxVertices = 10;
  static constexpr int kMaxEdges = 15;

  static Pattern from_edges(int n, std::vector<std::pair<int, int>> edges);
  // Mini-language: "K3", "C5", "S3", "P4", or "@file.edges".
  static Pattern parse(const std::string& spec);

  int n() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return (int)adj_[v].size(); }
  bool has_edge(int u, int v) const;
  const std::string& spec() const { return spec_; }

 private:
  Pattern() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::string spec_;
};

// Exact rho(H) by exhaustive search over half-integral covers
// psi: E_H -> {0, 1/2, 1}. Optimal fractional edge covers are half-integral,
// so this search space is complete.
Rational fractional_edge_cover_number(const Pattern& h);

// A piece of the decomposition, with its realization inside H.
struct CyclePiece {
  std::vector<int> vertices;  // cycle order x_0, ..., x_{2k}
  int length() const { return (int)vertices.size(); }
  Rational rho() const { return Rational(length(), 2); }
};

struct StarPiece {
  int root = -1;
  std::vector<int> leaves;  // sorted
  int petals() const { return (int)leaves.size(); }
  Rational rho() const { return Rational(petals()); }
};

struct Decomposition {
  std::vector<CyclePiece> cycles;
  std::vector<StarPiece> stars;
  Rational rho_total;
  std::string describe() const;
};

// Minimum-rho partition of V_H into odd cycles and stars (exhaustive over
// set partitions, deterministic tie-break).
Decomposition decompose(const Pattern& h);

// Sampled piece instances in a host graph (or in H itself, for counting).
struct CycleInstance {
  std::vector<int> vertices;  // cycle order
};

struct StarInstance {
  int root = -1;
  std::vector<int> leaves;  // ascending in the host's vertex order
};

using CopyInstance = std::vector<std::pair<int, int>>;  // sorted edge list

// Looks for an embedding of H that maps decomposition piece j onto sampled
// instance j (cycles up to rotation/reflection, star roots onto roots) with
// every H-edge present under `has_edge`. Returns the lexicographically
// smallest realized copy, or nullopt.
std::optional<CopyInstance> realize_copy(
    const Pattern& h, const Decomposition& t,
    const std::vector<CycleInstance>& cycles,
    const std::vector<StarInstance>& stars,
    const std::function<bool(int, int)>& has_edge);

// f_T(H): the number of ordered piece-instance tuples inside H itself that
// the assembly check accepts.
long long count_configurations(const Pattern& h, const Decomposition& t);

// ceil(m^rho(H)), the AGM ceiling on #H, as an exact integer.
long long agm_copies_upper_bound(long long m, const Rational& rho);

}  // namespace subsample
