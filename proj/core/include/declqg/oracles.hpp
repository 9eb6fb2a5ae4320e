#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "declqg/centralized.hpp"
#include "declqg/controller.hpp"
#include "declqg/problem.hpp"
#include "declqg/synthesis.hpp"

namespace declqg {

/// Exact expected cost of an admissible linear controller: builds the
/// closed-loop augmented LTV system over (x, zhat, z) (or (x, z) for the
/// centralized realization), propagates its exact second moment forward,
/// and accumulates the expected cost. No sampling.
double evaluate_policy_cost(const ValidatedProblem& problem,
                            const LinearController& controller);

/// Disturbance-feedback program: the optimal cost recomputed from first
/// principles as an exact convex quadratic program over strictly causal
/// maps from purified outputs to inputs, with the information-structure
/// sparsity mask (u^1_t may use only ytilde^1_{0:t-1}; u^2_t may use
/// ytilde_{0:t-1}; both may use an affine term).
struct DisturbanceFeedbackSolution {
  double optimal_cost = 0.0;
  /// Q[t][s] maps ytilde_s to u_t for s < t (m x p, masked rows/cols zero).
  std::vector<std::vector<Matrix>> Q;
  /// Affine feedforward per stage (zero whenever mu_init = 0).
  std::vector<Vector> feedforward;
  double condition_estimate = 0.0;
  bool ill_conditioned = false;  // condition estimate > 1e12; result still valid
};

/// Minimizes the expected cost over the masked disturbance-feedback
/// parameters by solving the normal equations exactly. Intended for
/// desk-scale instances (up to a few thousand decision scalars).
DisturbanceFeedbackSolution disturbance_feedback_optimum(const ValidatedProblem& problem);

/// Outcome of the alternating fixed-point iteration on the coupled
/// recursions. Non-convergence is a reported result, not an error.
struct FixedPointResult {
  bool converged = false;
  int iterations = 0;
  double last_change = 0.0;
  std::optional<TwoPlayerGains> gains;  // empty iff not converged
};

/// Alternates (i) the forward SigmaHat/LHat recursion holding KHat fixed
/// and (ii) the backward PHat/KHat recursion holding LHat fixed, starting
/// from KHat = the centralized K masked to its admissible rows. Stops when
/// successive gain schedules change by less than tol in max norm.
FixedPointResult fixed_point_gains(const ValidatedProblem& problem, double tol,
                                   int max_iter);

/// Person-by-person stationarity probe: applies `trials` random admissible
/// rank-one perturbations of each player's gain schedules (zero masks
/// respected, both signs of each direction tried) and evaluates the exact
/// cost of every perturbed controller. Returns the largest observed cost
/// decrease relative to the unperturbed controller; at the optimum this
/// must not exceed numerical noise.
double pbp_perturbation_check(const ValidatedProblem& problem,
                              const CentralizedSolution& centralized,
                              const TwoPlayerGains& gains, double eps, int trials,
                              std::uint64_t seed);

}  // namespace declqg
