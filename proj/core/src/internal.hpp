#pragma once

#include <cstdint>
#include <random>

namespace qglue::detail {

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// uniform_real_distribution is implementation-defined, which would break
// the fixed-seed reproducibility contract across platforms.
inline double canonical_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qglue::detail
