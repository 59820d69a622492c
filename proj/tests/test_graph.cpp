#include <doctest.h>

#include <cmath>

#include "subsample/generators.hpp"
#include "subsample/graph.hpp"

using namespace subsample;

TEST_CASE("edge list parsing round-trips") {
  HostGraph g = HostGraph::load("# a triangle plus isolated vertex\n"
                                "# n=4\n"
                                "0 1\n1 2\n2 0\n");
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.degree(3) == 0);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  HostGraph again = HostGraph::load(g.to_edge_list_text());
  CHECK(again.n() == g.n());
  CHECK(again.edges() == g.edges());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(HostGraph::load("0 0\n"), ParseError);
  CHECK_THROWS_AS(HostGraph::load("0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(HostGraph::load("0 1\n2\n"), ParseError);
  CHECK_THROWS_AS(HostGraph::load("0 -2\n"), ParseError);
  try {
    HostGraph::load("0 1\n1 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("neighbor indexing is 1-based and insertion-ordered") {
  HostGraph g = HostGraph::load("0 1\n0 2\n0 3\n");
  CHECK(g.neighbor(0, 1) == 1);
  CHECK(g.neighbor(0, 2) == 2);
  CHECK(g.neighbor(0, 3) == 3);
  CHECK(g.neighbor(2, 1) == 0);
}

TEST_CASE("precedes is a strict total order") {
  HostGraph g = make_erdos_renyi(20, 0.3, 11);
  for (int u = 0; u < g.n(); ++u) {
    CHECK_FALSE(g.precedes(u, u));
    for (int v = 0; v < g.n(); ++v) {
      if (u == v) continue;
      CHECK(g.precedes(u, v) != g.precedes(v, u));
      for (int w = 0; w < g.n(); ++w)
        if (g.precedes(u, v) && g.precedes(v, w)) CHECK(g.precedes(u, w));
    }
  }
}

TEST_CASE("larger_neighbors is bounded by sqrt(2m)") {
  // also holds on the star, where the center's bound is tight-ish
  for (const HostGraph& g :
       {make_complete(6), make_star(9), make_lollipop(5, 4),
        make_erdos_renyi(25, 0.4, 2)}) {
    double cap = std::sqrt((double)g.two_m());
    for (int v = 0; v < g.n(); ++v)
      CHECK((double)g.larger_neighbors(v).size() <= cap);
  }
}

TEST_CASE("generators produce the expected shapes") {
  CHECK(make_complete(6).m() == 15);
  CHECK(make_cycle(5).m() == 5);
  CHECK(make_star(4).degree(0) == 4);
  CHECK(make_path(4).m() == 3);
  CHECK(make_lollipop(4, 3).n() == 7);
  CHECK(make_lollipop(4, 3).m() == 9);
  HostGraph two_k3 = disjoint_union(make_complete(3), make_complete(3));
  CHECK(two_k3.n() == 6);
  CHECK(two_k3.m() == 6);
  CHECK(two_k3.has_edge(3, 4));
  CHECK_FALSE(two_k3.has_edge(2, 3));
  HostGraph er1 = make_erdos_renyi(12, 0.4, 3);
  HostGraph er2 = make_erdos_renyi(12, 0.4, 3);
  CHECK(er1.edges() == er2.edges());
}
