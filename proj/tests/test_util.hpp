// Shared helpers for the unit suites: deterministic sampling and tolerance
// comparisons kept independent of library internals.
#pragma once

#include <cmath>
#include <cstdint>

namespace testutil {

// xorshift*-based uniform doubles; identical across platforms.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 1) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
  }
  double uniform(double lo, double hi) {
    const double u = (next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

inline double relerr(double got, double want) {
  return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace testutil
