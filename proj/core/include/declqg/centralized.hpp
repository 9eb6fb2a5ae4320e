#pragma once

#include <vector>

#include "declqg/problem.hpp"

namespace declqg {

/// Forward filter schedules: error covariances Sigma[0..T] and filter
/// gains L[0..T-1].
struct FilterSchedules {
  std::vector<Matrix> Sigma;
  std::vector<Matrix> L;
};

/// Backward control schedules: cost-to-go P[0..T] and feedback gains
/// K[0..T-1].
struct ControlSchedules {
  std::vector<Matrix> P;
  std::vector<Matrix> K;
};

/// Solution of the centralized problem: both schedule pairs plus the
/// optimal expected cost.
struct CentralizedSolution {
  std::vector<Matrix> Sigma;  // T+1, symmetric PSD
  std::vector<Matrix> L;      // T, n x p
  std::vector<Matrix> P;      // T+1, symmetric PSD
  std::vector<Matrix> K;      // T, m x n
  double optimal_cost = 0.0;
};

/// Forward filter recursion:
///   Sigma_0 = Sigma_init
///   L_t     = -(A Sigma C^T + U^T) (C Sigma C^T + V)^-1
///   Sigma+  = A Sigma A^T + L (C Sigma A^T + U) + W
/// The innovation covariance is factored, never inverted; throws
/// SingularInnovation if it is numerically singular.
FilterSchedules filter_recursion(const ValidatedProblem& problem);

/// Backward control recursion:
///   P_T = P_final
///   K_t = -(B^T P+ B + R)^-1 (B^T P+ A + S^T)
///   P   = A^T P+ A + (A^T P+ B + S) K + Q
/// Throws SingularHessian if B^T P+ B + R is numerically singular.
ControlSchedules control_recursion(const ValidatedProblem& problem);

/// Closed-form optimal expected cost,
///   tr(P_0 Sigma_init) + sum_t [tr(P+ W) + tr(Sigma K^T (B^T P+ B + R) K)]
///   + mu_init^T P_0 mu_init.
double centralized_cost(const ValidatedProblem& problem,
                        const CentralizedSolution& solution);

/// Runs both recursions and evaluates the cost.
CentralizedSolution solve_centralized(const ValidatedProblem& problem);

}  // namespace declqg
