#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <vector>

#include "subsample/rng.hpp"

using namespace subsample;

TEST_CASE("streams are deterministic and independent") {
  RandomSource a(42, 0), b(42, 0), c(42, 1), d(7, 0);
  bool any_diff_stream = false, any_diff_seed = false;
  for (int i = 0; i < 64; ++i) {
    uint64_t x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) any_diff_stream = true;
    if (x != d.next()) any_diff_seed = true;
  }
  CHECK(any_diff_stream);
  CHECK(any_diff_seed);
}

TEST_CASE("uniform_below stays in range and hits every value") {
  RandomSource src(1, 0);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 2000; ++i) {
    uint64_t x = src.uniform_below(7);
    REQUIRE(x < 7);
    ++seen[x];
  }
  for (int v : seen) CHECK(v > 0);
}

TEST_CASE("uniform_below passes chi-square at alpha=0.001") {
  // 60000 draws over 6 outcomes, matching a directed-edge draw on a triangle
  const int k = 6;
  const long long trials = 60000;
  RandomSource src(12345, 0);
  std::vector<long long> counts(k, 0);
  for (long long i = 0; i < trials; ++i) ++counts[src.uniform_below(k)];
  double expected = (double)trials / k, chi = 0;
  for (long long c : counts) chi += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist(k - 1);
  CHECK(chi < quantile(dist, 0.999));
}

TEST_CASE("concrete driver treats certain coins as free") {
  RandomSource src(9, 3);
  ConcreteDriver with_coin(6, src), without(6, src);
  // p = 3 * (2m)^(-1/2) with 2m = 6 clamps to 1: no randomness consumed
  CHECK(with_coin.coin(CoinProb{Rational(3), 1}));
  for (int i = 0; i < 16; ++i)
    CHECK(with_coin.uniform_index(1000) == without.uniform_index(1000));
}

TEST_CASE("concrete driver coin respects simple rational probabilities") {
  RandomSource src(5, 0);
  ConcreteDriver drv(6, src);
  long long heads = 0;
  const long long trials = 40000;
  for (long long i = 0; i < trials; ++i)
    if (drv.coin(CoinProb{Rational(1, 3), 0})) ++heads;
  double rate = (double)heads / trials;
  double sigma = std::sqrt((1.0 / 3) * (2.0 / 3) / trials);
  CHECK(std::abs(rate - 1.0 / 3) < 5 * sigma);
}
