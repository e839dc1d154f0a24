#pragma once
#include <cstdint>
#include <random>

namespace tlab {

// uniform doubles derived from the raw 64-bit stream; avoids the
// implementation-defined behaviour of std::uniform_real_distribution
// so that seeded corpora are reproducible across standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace tlab
