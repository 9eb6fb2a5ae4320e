#pragma once

#include <cstdint>
#include <random>

#include "declqg/linalg.hpp"

namespace declqg {

/// Derives a stream seed from a master seed and a counter (splitmix64
/// finalizer). Used for per-rollout and per-trial seed splitting.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic standard-normal sampler: mt19937_64 + Box-Muller, so the
/// stream does not depend on the standard library's unspecified
/// normal_distribution implementation.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in (0, 1].
  double uniform();

  /// One N(0, 1) draw.
  double normal();

  /// A vector of independent N(0, 1) draws.
  Vector normal_vector(Eigen::Index dim);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace declqg
