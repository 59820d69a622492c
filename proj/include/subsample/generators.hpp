#pragma once

#include <cstdint>

#include "subsample/graph.hpp"

namespace subsample {

HostGraph make_complete(int n);
HostGraph make_cycle(int n);
HostGraph make_star(int petals);  // center 0, leaves 1..petals
HostGraph make_path(int n);       // 0-1-...-(n-1)
HostGraph make_erdos_renyi(int n, double p, uint64_t seed);
// Clique on `clique` vertices with a path of `tail` extra vertices hanging
// off vertex 0.
HostGraph make_lollipop(int clique, int tail);
HostGraph disjoint_union(const HostGraph& a, const HostGraph& b);

}  // namespace subsample
