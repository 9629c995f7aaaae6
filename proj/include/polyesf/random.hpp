#pragma once

#include <cstdint>

namespace polyesf {

/// Seedable, splittable random stream (xoshiro256** seeded via splitmix64).
/// All derived draws are computed from raw 64-bit words in this class, so a
/// seed determines every trajectory exactly.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed);

  uint64_t next_u64();

  /// Uniform on the open interval (0,1); never returns an endpoint.
  double uniform01();

  /// Uniform integer in [0, n).
  uint64_t uniform_below(uint64_t n);

  /// Standard normal via the polar method (one value cached).
  double normal();

  /// Gamma(shape, 1) via Marsaglia-Tsang rejection; shapes below 1 are
  /// boosted with the U^(1/shape) identity.
  double gamma(double shape);

  /// Derive an independent stream; deterministic given this stream's state.
  RandomSource split();

 private:
  uint64_t state_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace polyesf
