#pragma once

#include <cstdint>
#include <vector>

#include "hilbert/common.hpp"

namespace hilbert {

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for substream `index` of a run seeded with `seed`.
std::uint64_t substreamSeed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256** generator with platform-independent double conversion, so
/// that reports are byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller (one value per call, no caching).
  double normal();
  /// Uniform direction on S^{n-1}.
  Vec direction(int n);

 private:
  std::uint64_t s_[4];
};

/// Radical inverse of `index` in `base` (van der Corput).
double radicalInverse(std::uint64_t index, int base);

/// The `index`-th point of the Halton sequence in [0,1)^dim.
Vec haltonPoint(std::uint64_t index, int dim);

}  // namespace hilbert
