#pragma once

#include "polyopt/rational.hpp"

#include <cstdint>
#include <random>

namespace polyopt {

/// Bound B for generic integer choices drawn from [-B, B].
inline constexpr std::int64_t kGenericBound = std::int64_t{1} << 16;

/// splitmix64 finalizer; derives independent sub-seeds from (seed, tag).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

/// Seeded generator with a platform-independent integer draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi] by rejection sampling on raw 64-bit output.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Rational coefficient(std::int64_t bound = kGenericBound) { return Rational(uniform(-bound, bound)); }
  Rational nonzero_coefficient(std::int64_t bound = kGenericBound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace polyopt
