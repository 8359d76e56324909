#pragma once

// Seeded generators for the property tests. Seeds are fixed so failures
// reproduce; the failing inputs are printed by the checks themselves.

#include <cstdint>
#include <numeric>
#include <random>

namespace oracle {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  int sign() { return range(0, 1) == 0 ? -1 : 1; }

  long nonzero(long bound) { return range(1, bound) * sign(); }

  /// p in [lo, hi] coprime to q.
  long coprime_to(long q, long lo, long hi) {
    for (;;) {
      const long p = range(lo, hi);
      if (std::gcd(p, q) == 1) return p;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
