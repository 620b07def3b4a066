#pragma once

#include <cstdint>

#include "hypercomplex/cd_algebra.hpp"
#include "hypercomplex/field.hpp"

namespace hypercomplex {

/// SplitMix64. Small, portable and fully specified, so that trial streams can
/// be reproduced by other implementations from the seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31U);
  }

  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// The generator used for trial `index` of a sweep seeded with `seed`:
/// seed and index are mixed into a fresh SplitMix64 state. Each trial owns its
/// stream, so partitioning trials across workers cannot change any outcome.
[[nodiscard]] inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED03ULL));
  return SplitMix64(mixer.next());
}

/// Coefficient box for random elements: integers in [-5, 5] over Q (each
/// polynomial coefficient over cyclotomic fields), uniform residues over F_p.
[[nodiscard]] Scalar random_scalar(const Field& field, SplitMix64& rng);
[[nodiscard]] CdElement random_element(const CdAlgebra& algebra, SplitMix64& rng);

}  // namespace hypercomplex
