#pragma once

#include "qvdp/solvers.hpp"

namespace qvdp {

struct TruncationOptions {
  int max_dim = 160;
  double tail_tolerance = 1e-9;  ///< bound on p_{N-2} + p_{N-1}
  double growth = 1.5;
  SteadyOptions steady = {};
};

struct TruncationResult {
  int dim = 0;
  SteadySolution solution;
};

/// Population of the two highest levels of a truncated state.
double top_tail(const DensityMatrix& rho);

/// Smallest Fock truncation whose steady state has a top-two-level tail
/// below options.tail_tolerance.
///
/// Starts from max(6, ceil(<n>_mf) + 10) with <n>_mf = gamma1 / (2 gamma2),
/// grows by options.growth (clamped to max_dim) until the tail test passes,
/// then walks back down to the smallest dimension that passes on its own
/// solve. Throws ErrorCode::truncation_failure past max_dim.
TruncationResult choose_truncation(const ModelParams& params, const TruncationOptions& options = {});

/// choose_truncation() when fixed_dim == 0, otherwise a single solve at fixed_dim.
TruncationResult solve_steady(const ModelParams& params, int fixed_dim = 0,
                              const TruncationOptions& options = {});

}  // namespace qvdp
