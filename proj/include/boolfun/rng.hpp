#pragma once
// SplitMix64 used as a counter-based generator: draw k of a stream seeded
// with s is mix(s + (k+1) * golden), which makes every value a pure function
// of (seed, counter) and identical across platforms.

#include <cstdint>

namespace boolfun {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in {0, ..., bound-1} (bound > 0) via 64-bit modulo; the bias is
  // below 2^-50 for every bound used here.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace boolfun
