#pragma once

#include <stdexcept>
#include <string>

namespace declqg {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix or schedule has the wrong shape for the declared block sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A block that must be exactly zero (triangular structure or an
/// information-pattern mask) has a nonzero entry.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A covariance or cost matrix violates its (semi)definiteness assumption.
class DefinitenessError : public Error {
 public:
  using Error::Error;
};

/// A problem file is not valid JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A problem or gains file parses but does not match the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// The innovation covariance C*Sigma*C^T + V is numerically singular.
class SingularInnovation : public Error {
 public:
  using Error::Error;
};

/// The control Hessian B^T*P*B + R is numerically singular.
class SingularHessian : public Error {
 public:
  using Error::Error;
};

/// The per-stage gain elimination matrix is numerically singular.
class EliminationSingular : public Error {
 public:
  using Error::Error;
};

/// A diagonal pivot block of the block-tridiagonal factorization is
/// numerically singular.
class PivotFailure : public Error {
 public:
  using Error::Error;
};

/// Recovered gain schedules disagree with the full forward/backward
/// propagation beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A controller was stepped past the end of its horizon.
class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace declqg
