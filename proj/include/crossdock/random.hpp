#pragma once

// Draws built directly on std::mt19937_64 output. The standard distributions
// are implementation-defined, which would make seeded instances and search
// traces differ between standard libraries.

#include <cstdint>
#include <random>

namespace crossdock {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound), bound >= 1.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

/// Uniform integer in [lo, hi].
inline int UniformInt(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double Uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace crossdock
