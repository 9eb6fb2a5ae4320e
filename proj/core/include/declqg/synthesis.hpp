#pragma once

#include <algorithm>
#include <vector>

#include "declqg/block_tridiagonal.hpp"
#include "declqg/centralized.hpp"
#include "declqg/problem.hpp"

namespace declqg {

/// Player 1's standalone filter schedules over the 11-blocks:
/// Gamma[0..T] (n1 x n1), M[0..T-1] (n1 x p1), and the closed-loop map
/// A_M = A11 + M C11.
struct Player1Filter {
  std::vector<Matrix> Gamma;
  std::vector<Matrix> M;
  std::vector<Matrix> A_M;
};

/// Player 2's standalone control schedules over the 22-blocks:
/// F[0..T] (n2 x n2), J[0..T-1] (m2 x n2), and A_J = A22 + B22 J.
struct Player2Control {
  std::vector<Matrix> F;
  std::vector<Matrix> J;
  std::vector<Matrix> A_J;
};

/// Both decoupled schedule sets together.
struct DecoupledSchedules {
  std::vector<Matrix> Gamma;  // T+1, n1 x n1, symmetric PSD
  std::vector<Matrix> M;      // T,   n1 x p1
  std::vector<Matrix> F;      // T+1, n2 x n2, symmetric PSD
  std::vector<Matrix> J;      // T,   m2 x n2
  std::vector<Matrix> A_M;    // T,   n1 x n1
  std::vector<Matrix> A_J;    // T,   n2 x n2
};

/// Complete two-player synthesis output. The assembled gains have the
/// zero structure LHat = [[M, 0], [LHat21, 0]] and
/// KHat = [[0, 0], [KHat21, J]], so LHat * E2 = 0 and E1^T * KHat = 0
/// exactly by construction.
struct TwoPlayerGains {
  DecoupledSchedules decoupled;
  std::vector<Matrix> SigmaHat21;  // T+1, n2 x n1
  std::vector<Matrix> PHat21;      // T+1, n2 x n1
  std::vector<Matrix> LHat21;      // T,   n2 x p1
  std::vector<Matrix> KHat21;      // T,   m2 x n1
  std::vector<Matrix> LHat;        // T,   n x p
  std::vector<Matrix> KHat;        // T,   m x n
  std::vector<Matrix> SigmaHat;    // T+1, n x n
  std::vector<Matrix> PHat;        // T+1, n x n
  std::vector<Matrix> AHat;        // T,   n x n; A + B KHat + LHat C
  double optimal_cost = 0.0;
};

/// Max relative residual of each equation family of the coupled
/// recursions, evaluated over all timesteps.
struct ResidualReport {
  double sigma_update = 0.0;
  double lhat_formula = 0.0;
  double phat_update = 0.0;
  double khat_formula = 0.0;

  double max() const {
    return std::max({sigma_update, lhat_formula, phat_update, khat_formula});
  }
};

/// Forward M/Gamma recursion over the subsystem-1 blocks:
///   Gamma_0 = Sigma_init^11
///   M       = -(A11 Gamma C11^T + U11^T) (C11 Gamma C11^T + V11)^-1
///   Gamma+  = A11 Gamma A11^T + M (C11 Gamma A11^T + U11) + W11
Player1Filter player1_filter_recursion(const ValidatedProblem& problem);

/// Backward J/F recursion over the subsystem-2 blocks:
///   F_T = P_final^22
///   J   = -(B22^T F+ B22 + R22)^-1 (B22^T F+ A22 + S22^T)
///   F   = A22^T F+ A22 + (A22^T F+ B22 + S22) J + Q22
Player2Control player2_control_recursion(const ValidatedProblem& problem);

/// Runs both decoupled recursions.
DecoupledSchedules decoupled_schedules(const ValidatedProblem& problem);

/// Reduces the coupled 21-block recursions to the block-tridiagonal
/// boundary-value system in eta_t = (vec(Phat21_t), vec(Sigmahat21_{t+1})).
/// The mutually referencing per-stage gain equations for (LHat21, KHat21)
/// are eliminated exactly by a per-stage linear solve, the resulting
/// affine updates are vectorized with Kronecker-product coefficients, and
/// the boundary data Sigma_init^21 and P_final^21 are folded into the
/// first and last right-hand-side blocks. Throws EliminationSingular with
/// the timestep if a per-stage elimination matrix is numerically singular.
BoundarySystem assemble_boundary_system(const ValidatedProblem& problem,
                                        const CentralizedSolution& centralized,
                                        const DecoupledSchedules& decoupled);

/// Unpacks the boundary-system solution into the 21-block schedules,
/// back-substitutes the per-stage gains LHat21 and KHat21, assembles the
/// full LHat/KHat, and propagates the full SigmaHat (forward) and PHat
/// (backward) recursions. Throws ConsistencyError if the propagated
/// recursions disagree with the block solution beyond 1e-8 relative.
TwoPlayerGains recover_gains(const ValidatedProblem& problem,
                             const CentralizedSolution& centralized,
                             const DecoupledSchedules& decoupled,
                             const std::vector<Vector>& eta);

/// Optimal two-player expected cost,
///   tr(P_0 Sigma_init)
///   + sum_t [ tr(P+ W) + tr(Sigma K^T (B^T P+ B + R) K)
///           + tr((SigmaHat - Sigma) (KHat - K)^T (B^T P+ B + R) (KHat - K)) ]
///   + mu_init^T P_0 mu_init.
double two_player_cost(const ValidatedProblem& problem,
                       const CentralizedSolution& centralized,
                       const TwoPlayerGains& gains);

/// Evaluates both sides of the SigmaHat update, the LHat formula, the
/// PHat update, and the KHat formula at every t and reports the max
/// relative residual per equation family.
ResidualReport theorem2_residuals(const ValidatedProblem& problem,
                                  const CentralizedSolution& centralized,
                                  const TwoPlayerGains& gains);

/// Full pipeline: decoupled recursions, boundary-system assembly, O(T)
/// tridiagonal solve, gain recovery, and cost evaluation.
TwoPlayerGains synthesize(const ValidatedProblem& problem,
                          const CentralizedSolution& centralized);

}  // namespace declqg
