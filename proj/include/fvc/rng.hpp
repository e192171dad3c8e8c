#pragma once

#include <cstdint>

namespace fvc {

// splitmix64. Fixed here (rather than std::mt19937 etc.) so that seeded
// graphs and batches reproduce bit-exactly across implementations:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ z>>30) * 0xbf58476d1ce4e5b9
//   z = (z ^ z>>27) * 0x94d049bb133111eb
//   output z ^ z>>31
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound = 0 yields 0. Modulo bias is irrelevant at
  // the tiny bounds used here.
  uint64_t next_below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Deterministic seed derivation for sub-streams (per-trial graphs etc.).
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
  SplitMix64 s(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  return s.next();
}

}  // namespace fvc
