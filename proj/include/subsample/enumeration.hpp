#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subsample/halfpower.hpp"
#include "subsample/rng.hpp"

namespace subsample {

// Drives a sampler through every random branch it can take. Protocol:
//
//   EnumerationDriver drv(two_m);
//   do {
//     drv.begin_run();
//     ... run the sampler once against an oracle using drv ...
//     ... inspect path_probability() / path_has_reject() ...
//   } while (drv.advance());
//
// Uniform draws fan out into all n values (probability 1/n each); coins fan
// out into accept (their exact symbolic probability) and reject. Reject
// probabilities 1-p leave the half-power algebra, but every reject branch
// ends in a fail outcome, so their mass is never needed.
class EnumerationDriver final : public RandomDriver {
 public:
  explicit EnumerationDriver(long long two_m) : two_m_(two_m) {}

  void begin_run() { pos_ = 0; }

  // Move to the next unexplored path; false when the tree is exhausted.
  bool advance() {
    while (!path_.empty()) {
      Choice& c = path_.back();
      if (c.taken + 1 < c.count) {
        ++c.taken;
        return true;
      }
      path_.pop_back();
    }
    return false;
  }

  HalfPowerProb path_probability() const {
    HalfPowerProb p = HalfPowerProb::one();
    for (const auto& c : path_) {
      if (c.is_coin) {
        if (c.taken != 0)
          throw std::logic_error("reject branch has no exact probability");
        p = p.times(c.accept_prob);
      } else {
        p = p.times(HalfPowerProb{Rational(1, (long long)c.count), 0});
      }
    }
    return p;
  }

  bool path_has_reject() const {
    for (const auto& c : path_)
      if (c.is_coin && c.taken != 0) return true;
    return false;
  }

  uint64_t uniform_index(uint64_t n) override {
    if (pos_ < path_.size()) {
      const Choice& c = path_[pos_];
      if (c.is_coin || c.count != n)
        throw std::logic_error("nondeterministic sampler transcript");
      ++pos_;
      return c.taken;
    }
    path_.push_back(Choice{0, n, false, HalfPowerProb::one()});
    ++pos_;
    return 0;
  }

  bool coin(const CoinProb& p) override {
    HalfPowerProb hp{p.coeff, p.half_exp};
    if (hp.at_least_one(two_m_)) return true;  // certain, not a branch
    if (pos_ < path_.size()) {
      const Choice& c = path_[pos_];
      if (!c.is_coin)
        throw std::logic_error("nondeterministic sampler transcript");
      ++pos_;
      return c.taken == 0;
    }
    path_.push_back(Choice{0, 2, true, hp});
    ++pos_;
    return true;
  }

 private:
  struct Choice {
    uint64_t taken;
    uint64_t count;
    bool is_coin;
    HalfPowerProb accept_prob;  // coin choices only
  };

  long long two_m_;
  std::vector<Choice> path_;
  size_t pos_ = 0;
};

}  // namespace subsample
