#pragma once

#include <cstdint>

#include "declqg/problem.hpp"

namespace declqg {

/// Deterministically generates a random problem instance that satisfies
/// every model invariant by construction. Dynamics blocks are scaled so the
/// closed loop stays numerically tame over long horizons; covariance and
/// cost joints are built as G^T G + eps*I so the definiteness assumptions
/// hold strictly.
///
/// coupling in [0, 1] scales every cross-subsystem term (the 21-blocks of
/// A, B, C and of the noise, cost, and boundary matrices, plus the U and S
/// off-blocks); coupling = 0 yields two fully independent subsystems.
ProblemSpec random_instance(std::uint64_t seed, const BlockDims& dims, int horizon,
                            double coupling = 1.0);

}  // namespace declqg
