#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sbq/number.hpp"
#include "sbq/seminorm.hpp"

namespace sbq::testing {

// Deterministic gaussian inputs for property tests (mt19937_64 stream plus
// Box-Muller, independent of the library's own generator).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  std::uint64_t next_u64() { return gen_(); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Number number() {
    Number::Coeffs c;
    for (double& v : c) v = normal();
    return Number(c);
  }

  Number pure() {
    auto c = number().coeffs();
    c[0] = c[7] = 0.0;
    return Number(c);
  }

  // both seminorms within a factor 10 of each other
  Number invertible(double min_ratio = 0.1) {
    for (;;) {
      const Number x = number();
      const SeminormPair p = seminorm_pair(x);
      if (p.min_value() >= min_ratio * p.max_value()) return x;
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sbq::testing
