#include "subsample/rng.hpp"

#include <cmath>

#include "subsample/halfpower.hpp"

namespace subsample {

bool ConcreteDriver::coin(const CoinProb& p) {
  HalfPowerProb hp{p.coeff, p.half_exp};
  // Certain coins consume no randomness, keeping transcripts identical
  // between this driver and the enumerating one.
  if (hp.at_least_one(two_m_)) return true;
  // sqrt(2m) is irrational in general; the numeric evaluation deviates from
  // the exact probability by < 2^-50 per comparison.
  return src_.uniform_double() < hp.to_double(two_m_);
}

}  // namespace subsample
