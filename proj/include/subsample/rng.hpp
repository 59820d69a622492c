#pragma once

#include <cstdint>

#include "subsample/rational.hpp"

namespace subsample {

// Counter-based generator: output i of stream (seed, stream) is
// splitmix64(base + i*gamma) with base derived from seed and stream.
// Any (seed, stream, counter) triple can be evaluated independently, which
// makes trials embarrassingly parallel and replay exact.
class RandomSource {
 public:
  RandomSource(uint64_t seed, uint64_t stream)
      : base_(mix64(mix64(seed + GAMMA) ^ stream)), counter_(0) {}

  uint64_t next() { return mix64(base_ + (++counter_) * GAMMA); }

  // Uniform on [0, n); unbiased via rejection.
  uint64_t uniform_below(uint64_t n) {
    uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      uint64_t x = next();
      if (x >= threshold) return (x - threshold) % n;
    }
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform_double() { return (next() >> 11) * 0x1.0p-53; }

 private:
  static constexpr uint64_t GAMMA = 0x9E3779B97F4A7C15ull;

  static uint64_t mix64(uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  uint64_t base_;
  uint64_t counter_;
};

// Symbolic description of a biased coin: success probability
// coeff * (2m)^(-half_exp/2), clamped to 1. Keeping the symbolic form here
// lets the exact verifier account for each coin without discretizing it.
struct CoinProb {
  Rational coeff;
  int half_exp = 0;
};

// The only randomness interface the oracle and samplers see. The production
// driver draws from a RandomSource; the exact verifier substitutes a driver
// that enumerates all branches.
class RandomDriver {
 public:
  virtual ~RandomDriver() = default;
  virtual uint64_t uniform_index(uint64_t n) = 0;
  virtual bool coin(const CoinProb& p) = 0;
};

class ConcreteDriver final : public RandomDriver {
 public:
  ConcreteDriver(long long two_m, RandomSource src)
      : two_m_(two_m), src_(src) {}

  uint64_t uniform_index(uint64_t n) override { return src_.uniform_below(n); }

  bool coin(const CoinProb& p) override;

 private:
  long long two_m_;
  RandomSource src_;
};

}  // namespace subsample
