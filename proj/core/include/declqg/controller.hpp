#pragma once

#include <string>
#include <vector>

#include "declqg/centralized.hpp"
#include "declqg/problem.hpp"
#include "declqg/synthesis.hpp"

namespace declqg {

/// Stepping state of a controller: the current timestep and the pair of
/// conditional-mean estimates. z is Player 2's (or the centralized)
/// estimate; zhat is Player 1's. Both start at mu_init.
struct ControllerState {
  int t = 0;
  Vector z;
  Vector zhat;
};

enum class Realization { Centralized, TwoPlayer };

/// An admissible linear controller in the dual-estimator realization.
/// For the two-player realization the information-structure masks must
/// hold exactly: columns [p1, p) of every Lhat and rows [0, m1) of every
/// Khat are zero, so Player 1's estimator sees only y^1 and Player 1's
/// action depends only on zhat.
struct LinearController {
  Realization realization = Realization::TwoPlayer;
  std::vector<Matrix> K;     // T, m x n
  std::vector<Matrix> L;     // T, n x p
  std::vector<Matrix> Khat;  // T, m x n (two-player only)
  std::vector<Matrix> Lhat;  // T, n x p (two-player only)
  std::string id;
};

/// Initial state: t = 0, z = zhat = mu_init.
ControllerState initial_state(const ValidatedProblem& problem);

/// The optimal two-player controller of the synthesized solution.
LinearController optimal_two_player_controller(const CentralizedSolution& centralized,
                                               const TwoPlayerGains& gains);

/// The optimal centralized controller (single estimator).
LinearController optimal_centralized_controller(const CentralizedSolution& centralized);

/// A two-player-realization controller with arbitrary admissible gain
/// schedules. Throws StructureError if any schedule violates the
/// information-structure zero masks, and DimensionError on shape
/// mismatches.
LinearController make_custom_linear_controller(const BlockDims& dims,
                                               std::vector<Matrix> K,
                                               std::vector<Matrix> L,
                                               std::vector<Matrix> Khat,
                                               std::vector<Matrix> Lhat);

struct StepResult {
  Vector u;
  ControllerState next;
};

/// One step of the two-player law. y is the time-t measurement; the action
/// is computed from the pre-update estimates (which encode information up
/// to t-1), then both estimators advance:
///   u     = K zhat + Khat (z - zhat)
///   zhat+ = A zhat + B (K zhat) - Lhat (y - C zhat)
///   z+    = A z + B u - L (y - C z)
/// Player 1's estimator is driven by its own predicted input K zhat, which
/// is what keeps zhat computable from y^1 alone. The zero masks are
/// asserted on every step; throws HorizonExceeded when t >= T.
StepResult step_two_player(const ControllerState& state, const Vector& y,
                           const ValidatedProblem& problem,
                           const LinearController& controller);

/// One step of the centralized law: u = K z, z+ = A z + B u - L (y - C z).
/// The zhat field is kept equal to z.
StepResult step_centralized(const ControllerState& state, const Vector& y,
                            const ValidatedProblem& problem,
                            const LinearController& controller);

/// Dispatches on controller.realization.
StepResult step(const ControllerState& state, const Vector& y,
                const ValidatedProblem& problem, const LinearController& controller);

}  // namespace declqg
