#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subsample {

// Exact rational arithmetic on 64-bit words. All values in this project are
// small (probabilities with denominators bounded by (2m)^rho on desk-scale
// graphs), but intermediates go through __int128 so overflow throws instead
// of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den = 1) { assign(num, den); }

  static Rational from_int128(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    Rational r;
    r.num_ = checked_narrow(num);
    r.den_ = checked_narrow(den);
    return r;
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Rational operator+(const Rational& o) const {
    return from_int128((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                       (__int128)den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return from_int128((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                       (__int128)den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return from_int128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    return from_int128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  double to_double() const { return (double)num_ / (double)den_; }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void assign(long long num, long long den) {
    *this = from_int128(num, den);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rational: value out of 64-bit range");
    return (long long)v;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace subsample
