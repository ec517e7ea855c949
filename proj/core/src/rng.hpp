#pragma once

#include <cstdint>
#include <random>

#include "sbq/number.hpp"

namespace sbq::verify_detail {

// splitmix64: the canonical mixer used to derive one independent sub-seed
// per check from the suite seed.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t subseed(std::uint64_t seed, std::size_t check_index) {
  std::uint64_t state = seed;
  std::uint64_t s = 0;
  for (std::size_t i = 0; i <= check_index; ++i) s = splitmix64_next(state);
  return s;
}

// mt19937_64 has a bit-specified output sequence; normals come from
// Box-Muller rather than std::normal_distribution, whose algorithm is
// implementation-defined, so the drawn inputs reproduce across platforms.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1)
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(gen_() % n);
  }

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

  Number normal_number() {
    Number::Coeffs c;
    for (double& v : c) v = normal();
    return Number(c);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sbq::verify_detail
