#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "subsample/rational.hpp"

namespace subsample {

// Exact probability of the form coeff * (2m)^(-half_exp/2).
//
// This algebra is closed under everything the samplers do: every directed
// edge draw contributes a rational factor, every wedge acceptance coin
// contributes a half-integer power of 2m, and the final 1/f coin is rational.
struct HalfPowerProb {
  Rational coeff{1};
  int half_exp = 0;  // may be negative for coin probabilities like sqrt(2m)/d_w

  static HalfPowerProb one() { return HalfPowerProb{Rational(1), 0}; }
  static HalfPowerProb zero() { return HalfPowerProb{Rational(0), 0}; }

  bool is_zero() const { return coeff.is_zero(); }

  HalfPowerProb times(const HalfPowerProb& o) const {
    return HalfPowerProb{coeff * o.coeff, half_exp + o.half_exp};
  }

  // Fold every factor of 2m out of the rational coefficient into the
  // exponent, so (1/(2m))^k * (2m)^(-1/2) normalizes to coeff 1,
  // half_exp 2k+1.
  HalfPowerProb normalized(long long two_m) const {
    if (coeff.is_zero()) return zero();
    long long num = coeff.num();
    long long den = coeff.den();
    int exp = half_exp;
    while (den % two_m == 0) {
      den /= two_m;
      exp += 2;
    }
    while (num % two_m == 0) {
      num /= two_m;
      exp -= 2;
    }
    return HalfPowerProb{Rational(num, den), exp};
  }

  // Exact addition; the exponent gap must be even or the sum leaves the
  // representable algebra (cannot happen for transcripts of one sampler run,
  // asserted here).
  HalfPowerProb plus(const HalfPowerProb& o, long long two_m) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    HalfPowerProb a = *this;
    HalfPowerProb b = o;
    if (a.half_exp < b.half_exp) std::swap(a, b);
    int gap = a.half_exp - b.half_exp;
    if (gap % 2 != 0)
      throw std::logic_error("HalfPowerProb: odd exponent gap in addition");
    Rational scale(1);
    for (int i = 0; i < gap / 2; ++i) scale *= Rational(two_m);
    // b = b.coeff * (2m)^(gap/2) at exponent a.half_exp
    return HalfPowerProb{a.coeff + b.coeff * scale, a.half_exp};
  }

  // True iff value >= 1, i.e. coeff^2 >= (2m)^half_exp.
  bool at_least_one(long long two_m) const {
    if (coeff.is_zero()) return false;
    Rational sq = coeff * coeff;
    Rational pw(1);
    int e = half_exp;
    while (e > 0) {
      pw *= Rational(two_m);
      --e;
    }
    while (e < 0) {
      pw = pw / Rational(two_m);
      ++e;
    }
    return sq >= pw;
  }

  double to_double(long long two_m) const {
    double v = coeff.to_double();
    if (half_exp != 0) {
      double root = std::sqrt((double)two_m);
      int e = half_exp;
      while (e > 0) {
        v /= root;
        --e;
      }
      while (e < 0) {
        v *= root;
        ++e;
      }
    }
    return v;
  }

  // Exact comparison against (2m)^(-two_rho/2).
  bool equals_pure_power(long long two_m, int two_rho) const {
    HalfPowerProb n = normalized(two_m);
    return n.coeff.is_one() && n.half_exp == two_rho;
  }

  std::string to_string() const {
    std::string s;
    if (!coeff.is_one() || half_exp == 0) s += coeff.to_string();
    if (half_exp != 0) {
      if (!s.empty()) s += "*";
      s += "(2m)^(" + std::to_string(-half_exp) + "/2)";
    }
    return s;
  }
};

}  // namespace subsample
