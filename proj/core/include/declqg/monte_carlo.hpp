#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "declqg/controller.hpp"
#include "declqg/problem.hpp"

namespace declqg {

/// A single closed-loop trajectory and its realized cost.
struct Rollout {
  std::vector<Vector> x;     // T+1 states
  std::vector<Vector> u;     // T inputs
  std::vector<Vector> y;     // T measurements
  std::vector<Vector> z;     // T+1 Player-2/centralized estimates
  std::vector<Vector> zhat;  // T+1 Player-1 estimates
  double cost = 0.0;
};

/// A realized noise path: the initial state and the per-stage (w, v)
/// draws. Useful for twin-rollout experiments that perturb one noise
/// channel while holding everything else fixed.
struct NoiseSequence {
  Vector x0;
  std::vector<Vector> w;  // T, length n
  std::vector<Vector> v;  // T, length p
};

/// Draws x0 ~ N(mu_init, Sigma_init) and, for each t, (w, v) jointly from
/// the covariance [[W, U^T], [U, V]] through its symmetric PSD square root
/// (eigendecomposition with negative eigenvalues clipped at zero).
/// Deterministic in seed.
NoiseSequence sample_noise(const ValidatedProblem& problem, std::uint64_t seed);

/// Runs the closed loop on a fixed noise path. The realized cost is
///   sum_t [x; u]^T [[Q, S], [S^T, R]] [x; u] + x_T^T P_final x_T.
Rollout rollout_with_noise(const ValidatedProblem& problem,
                           const LinearController& controller,
                           const NoiseSequence& noise);

/// sample_noise + rollout_with_noise.
Rollout sample_rollout(const ValidatedProblem& problem,
                       const LinearController& controller, std::uint64_t seed);

/// Empirical cost statistics and per-t estimation-error moments over N
/// rollouts.
struct SimulationReport {
  std::int64_t rollouts = 0;
  double mean_cost = 0.0;
  double standard_error = 0.0;               // sample std / sqrt(N)
  std::vector<Matrix> cov_x_minus_z;         // T+1, n x n
  std::vector<Matrix> cov_x_minus_zhat;      // T+1, n x n
  std::vector<Vector> mean_x_minus_z;        // T+1, n
  std::vector<Vector> mean_x_minus_zhat;     // T+1, n
  std::uint64_t seed = 0;
  std::string controller;
};

/// Runs N rollouts with per-rollout seeds derived from (seed, index) by a
/// splittable counter scheme and aggregates mean, standard error, and
/// per-t error moments. Rollouts execute in parallel across fixed-size
/// chunks (thread count from DECLQG_THREADS, 0 or unset = hardware
/// concurrency); partial sums are combined in fixed chunk order, so the
/// report is identical for any thread count.
SimulationReport estimate_cost(const ValidatedProblem& problem,
                               const LinearController& controller,
                               std::int64_t rollouts, std::uint64_t seed);

/// Deviations of the empirical belief-error moments from the model
/// schedules: max over t of ||emp cov - Sigma|| / (1 + ||Sigma||) for both
/// estimators, plus the max norm of the empirical error means.
struct BeliefDeviation {
  double cov_z = 0.0;
  double cov_zhat = 0.0;
  double mean_z = 0.0;
  double mean_zhat = 0.0;
};

BeliefDeviation empirical_beliefs(const SimulationReport& report,
                                  const CentralizedSolution& centralized,
                                  const TwoPlayerGains& gains);

}  // namespace declqg
