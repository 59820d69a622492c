#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <map>

#include "subsample/generators.hpp"
#include "subsample/oracle.hpp"

using namespace subsample;

namespace {
ConcreteDriver make_driver(const HostGraph& g, uint64_t seed = 1,
                           uint64_t stream = 0) {
  return ConcreteDriver(g.two_m(), RandomSource(seed, stream));
}
}  // namespace

TEST_CASE("every query meters exactly one counter by one") {
  HostGraph g = make_complete(4);
  ConcreteDriver drv = make_driver(g);
  QueryOracle oracle(g, drv);

  CHECK(oracle.degree(0) == 3);
  CHECK(oracle.stats().degree_queries == 1);
  CHECK(oracle.stats().total() == 1);

  CHECK(oracle.neighbor(0, 1) == 1);
  CHECK(oracle.stats().neighbor_queries == 1);
  CHECK(oracle.stats().total() == 2);

  CHECK(oracle.pair(0, 3));
  CHECK(oracle.stats().pair_queries == 1);
  CHECK(oracle.stats().total() == 3);

  (void)oracle.sample_directed_edge();
  CHECK(oracle.stats().edge_sample_queries == 1);
  (void)oracle.sample_vertex_by_degree();
  CHECK(oracle.stats().edge_sample_queries == 2);
  CHECK(oracle.stats().total() == 5);

  (void)oracle.sample_uniform_vertex();
  CHECK(oracle.stats().vertex_sample_queries == 1);
  CHECK(oracle.stats().total() == 6);

  oracle.reset_stats();
  CHECK(oracle.stats().total() == 0);
}

TEST_CASE("invalid arguments throw instead of metering") {
  HostGraph g = make_path(3);
  ConcreteDriver drv = make_driver(g);
  QueryOracle oracle(g, drv);
  CHECK_THROWS(oracle.degree(5));
  CHECK_THROWS(oracle.neighbor(0, 0));
  CHECK_THROWS(oracle.neighbor(0, 2));
  CHECK_THROWS(oracle.pair(1, 1));
  CHECK(oracle.stats().total() == 0);
}

TEST_CASE("directed edge sampling is uniform over all 2m orientations") {
  HostGraph g = make_complete(3);
  ConcreteDriver drv = make_driver(g, 12345);
  QueryOracle oracle(g, drv);
  const long long trials = 60000;
  std::map<std::pair<int, int>, long long> counts;
  for (long long i = 0; i < trials; ++i) {
    DirectedEdge e = oracle.sample_directed_edge();
    CHECK(g.has_edge(e.tail, e.head));
    ++counts[{e.tail, e.head}];
  }
  REQUIRE(counts.size() == (size_t)g.two_m());
  double expected = (double)trials / g.two_m(), chi = 0;
  for (const auto& [edge, c] : counts)
    chi += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist((double)(g.two_m() - 1));
  CHECK(chi < quantile(dist, 0.999));
}

TEST_CASE("degree-proportional vertex sampling matches d_w/2m") {
  HostGraph g = make_star(4);  // center has degree 4 of 2m = 8
  ConcreteDriver drv = make_driver(g, 99);
  QueryOracle oracle(g, drv);
  const long long trials = 40000;
  long long center = 0;
  for (long long i = 0; i < trials; ++i)
    if (oracle.sample_vertex_by_degree() == 0) ++center;
  double rate = (double)center / trials;
  double sigma = std::sqrt(0.5 * 0.5 / trials);
  CHECK(std::abs(rate - 0.5) < 5 * sigma);
  CHECK(oracle.stats().edge_sample_queries == trials);
  CHECK(oracle.stats().vertex_sample_queries == 0);
}
