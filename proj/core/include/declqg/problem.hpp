#pragma once

#include <string>
#include <vector>

#include "declqg/linalg.hpp"

namespace declqg {

/// Sizes of the two-subsystem partition of state (n1, n2), input (m1, m2),
/// and measurement (p1, p2). The subsystem selectors are realized as index
/// ranges: subsystem 1 owns [0, n1) and subsystem 2 owns [n1, n), and
/// analogously for inputs and measurements.
struct BlockDims {
  int n1 = 0, n2 = 0;
  int m1 = 0, m2 = 0;
  int p1 = 0, p2 = 0;

  int n() const { return n1 + n2; }
  int m() const { return m1 + m2; }
  int p() const { return p1 + p2; }

  bool operator==(const BlockDims&) const = default;
};

/// Plant and measurement maps for one timestep. A (n x n), B (n x m), and
/// C (p x n) must be block-lower-triangular: the upper-right blocks
/// A[0:n1, n1:n], B[0:n1, m1:m], C[0:p1, n1:n] are required to be exactly
/// zero, so subsystem 1 is unaffected by subsystem 2.
struct StageDynamics {
  Matrix A, B, C;
};

/// Joint process/measurement noise second moments for one timestep. The
/// stacked noise (w, v) has covariance [[W, U^T], [U, V]], which must be
/// symmetric PSD with V symmetric positive definite.
struct StageNoise {
  Matrix W;  // n x n, cov(w)
  Matrix U;  // p x n, cov(v, w)
  Matrix V;  // p x p, cov(v)
};

/// Quadratic stage cost [x; u]^T [[Q, S], [S^T, R]] [x; u]. The joint
/// matrix must be symmetric PSD with R symmetric positive definite.
struct StageCost {
  Matrix Q;  // n x n
  Matrix S;  // n x m
  Matrix R;  // m x m
};

/// Full time-varying problem data. Matrix dimensions are fixed across the
/// horizon; per-stage values may differ.
struct ProblemSpec {
  BlockDims dims;
  int horizon = 0;
  std::vector<StageDynamics> dynamics;  // length horizon
  std::vector<StageNoise> noise;        // length horizon
  std::vector<StageCost> cost;          // length horizon
  Matrix Sigma_init;                    // n x n PSD, initial state covariance
  Matrix P_final;                       // n x n PSD, terminal cost weight
  Vector mu_init;                       // n, initial state mean (empty = zero)
};

/// One validation failure; t is -1 for horizon-independent data.
struct Violation {
  enum class Kind { Dimension, Structure, Definiteness };
  Kind kind = Kind::Dimension;
  int t = -1;
  std::string message;
};

/// Checks every model invariant and returns the full list of violations
/// in a deterministic order (empty means the spec is valid).
std::vector<Violation> check_problem(const ProblemSpec& spec);

/// Immutable validated problem instance; constructed only by validate().
/// Safe for concurrent read access.
class ValidatedProblem {
 public:
  const ProblemSpec& spec() const { return spec_; }
  const BlockDims& dims() const { return spec_.dims; }
  int horizon() const { return spec_.horizon; }

  const Matrix& A(int t) const { return spec_.dynamics[t].A; }
  const Matrix& B(int t) const { return spec_.dynamics[t].B; }
  const Matrix& C(int t) const { return spec_.dynamics[t].C; }
  const Matrix& W(int t) const { return spec_.noise[t].W; }
  const Matrix& U(int t) const { return spec_.noise[t].U; }
  const Matrix& V(int t) const { return spec_.noise[t].V; }
  const Matrix& Q(int t) const { return spec_.cost[t].Q; }
  const Matrix& S(int t) const { return spec_.cost[t].S; }
  const Matrix& R(int t) const { return spec_.cost[t].R; }
  const Matrix& Sigma_init() const { return spec_.Sigma_init; }
  const Matrix& P_final() const { return spec_.P_final; }
  const Vector& mu_init() const { return spec_.mu_init; }

 private:
  friend ValidatedProblem validate(ProblemSpec spec);
  explicit ValidatedProblem(ProblemSpec spec) : spec_(std::move(spec)) {}

  ProblemSpec spec_;
};

/// Validates spec against every model invariant. Throws the error type of
/// the first violation (DimensionError, StructureError, or
/// DefinitenessError); the message lists all violations with timesteps.
/// An empty mu_init is normalized to the zero vector.
ValidatedProblem validate(ProblemSpec spec);

}  // namespace declqg
