#include "qvdp/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace qvdp {

double top_tail(const DensityMatrix& rho) {
  const int n = rho.dim();
  return rho.population(n - 1) + rho.population(n - 2);
}

namespace {

/// Smallest M >= floor such that levels M-2, M-1 of rho carry less than tol.
int tail_candidate(const DensityMatrix& rho, int floor, double tol) {
  for (int m = floor; m < rho.dim(); ++m) {
    if (rho.population(m - 2) + rho.population(m - 1) < tol) return m;
  }
  return rho.dim();
}

}  // namespace

TruncationResult choose_truncation(const ModelParams& params, const TruncationOptions& options) {
  params.validate();
  constexpr int kMinDim = 6;
  const double start = std::ceil(mean_field_occupation(params)) + 10.0;
  if (!(start <= options.max_dim)) {
    std::ostringstream msg;
    msg << "choose_truncation: initial dimension " << start << " exceeds cap " << options.max_dim
        << " (mean-field occupation " << mean_field_occupation(params) << ")";
    throw Error(ErrorCode::truncation_failure, msg.str());
  }

  int dim = std::max(kMinDim, static_cast<int>(start));
  std::optional<TruncationResult> accepted;
  double last_tail = 0.0;
  while (true) {
    SteadySolution sol = steady_state(build_liouvillian(params, dim), options.steady);
    last_tail = top_tail(sol.rho);
    if (last_tail < options.tail_tolerance) {
      accepted = TruncationResult{dim, std::move(sol)};
      break;
    }
    if (dim >= options.max_dim) break;
    dim = std::min(options.max_dim,
                   std::max(dim + 1, static_cast<int>(std::ceil(dim * options.growth))));
  }
  if (!accepted) {
    std::ostringstream msg;
    msg << "choose_truncation: top-level population " << last_tail << " still above "
        << options.tail_tolerance << " at cap " << options.max_dim;
    throw Error(ErrorCode::truncation_failure, msg.str());
  }

  // Walk back down: the accepted tail profile predicts the smallest passing
  // dimension; confirm it on its own solve and step up if it misses.
  int candidate = tail_candidate(accepted->solution.rho, kMinDim, options.tail_tolerance);
  while (candidate < accepted->dim) {
    SteadySolution sol = steady_state(build_liouvillian(params, candidate), options.steady);
    if (top_tail(sol.rho) < options.tail_tolerance) {
      return TruncationResult{candidate, std::move(sol)};
    }
    candidate += std::max(1, candidate / 10);
  }
  return std::move(*accepted);
}

TruncationResult solve_steady(const ModelParams& params, int fixed_dim,
                              const TruncationOptions& options) {
  if (fixed_dim == 0) return choose_truncation(params, options);
  SteadySolution sol = steady_state(build_liouvillian(params, fixed_dim), options.steady);
  return TruncationResult{fixed_dim, std::move(sol)};
}

}  // namespace qvdp
