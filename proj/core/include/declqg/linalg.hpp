#pragma once

#include <Eigen/Dense>
#include <string>

namespace declqg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Column-stacking vectorization, vec(X).
Vector vec(const Matrix& x);

/// Inverse of vec(): reshape a column-stacked vector into rows x cols.
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// In-place symmetrization x <- (x + x^T)/2.
void symmetrize(Matrix& x);

/// Smallest and largest eigenvalue of a symmetric matrix.
double min_eigenvalue(const Matrix& sym);
double max_abs_eigenvalue(const Matrix& sym);

/// Symmetric PSD square root via eigendecomposition; eigenvalues below
/// clip_tol * max(|lambda|) are clipped to zero.
Matrix psd_sqrt(const Matrix& sym, double clip_tol = 1e-12);

/// Relative Frobenius deviation ||a - b|| / (1 + ||b||).
double relative_deviation(const Matrix& a, const Matrix& b);

/// Cholesky factorization of a symmetric positive definite matrix with an
/// explicit usability check, so near-singular systems fail loudly instead
/// of propagating garbage.
class SpdFactor {
 public:
  explicit SpdFactor(const Matrix& a);

  /// True iff the factorization succeeded and the matrix is numerically
  /// nonsingular (reciprocal condition estimate above rcond_floor).
  bool usable(double rcond_floor = 1e-14) const;

  double rcond() const { return rcond_; }

  Matrix solve(const Matrix& rhs) const { return llt_.solve(rhs); }
  Vector solve(const Vector& rhs) const { return llt_.solve(rhs); }

 private:
  Eigen::LLT<Matrix> llt_;
  bool success_ = false;
  double rcond_ = 0.0;
};

}  // namespace declqg
