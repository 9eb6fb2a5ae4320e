#pragma once

#include <string>

#include "declqg/centralized.hpp"
#include "declqg/monte_carlo.hpp"
#include "declqg/problem.hpp"
#include "declqg/synthesis.hpp"

namespace declqg {

/// Contents of a gains file: per-stage gain and covariance schedules plus
/// both optimal costs, with the originating problem's dims and horizon
/// echoed so a mismatched problem/gains pair is caught on reload.
struct GainsFile {
  BlockDims dims;
  int horizon = 0;
  double J0 = 0.0;
  double J_hat0 = 0.0;
  std::vector<Matrix> L, K, L_hat, K_hat;            // T
  std::vector<Matrix> Sigma, Sigma_hat, P, P_hat;    // T+1
};

void save_gains(const std::string& path, const BlockDims& dims, int horizon,
                const CentralizedSolution& centralized, const TwoPlayerGains& gains);

/// Throws ParseError / SchemaError on malformed content.
GainsFile load_gains(const std::string& path);

void save_report(const std::string& path, const SimulationReport& report);

}  // namespace declqg
