#pragma once

#include <string>

#include "declqg/problem.hpp"

namespace declqg {

/// Loads a problem-spec JSON file. Constant matrices are broadcast to all
/// horizon stages; per-stage arrays must have length exactly horizon;
/// a missing mu_init defaults to zero. Covariance and cost weight matrices
/// are symmetrized by averaging on load. Throws ParseError on malformed
/// JSON and SchemaError on missing fields, wrong array lengths, or
/// non-rectangular matrices.
ProblemSpec load_spec(const std::string& path);

/// Writes a problem spec as JSON (per-stage arrays, decimal doubles that
/// round-trip bit-exactly through load_spec).
void save_spec(const ProblemSpec& spec, const std::string& path);

}  // namespace declqg
