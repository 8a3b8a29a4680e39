#pragma once

#include <functional>
#include <vector>

#include "qvdp/lindblad.hpp"

namespace qvdp {

struct SteadySolution {
  DensityMatrix rho;
  double residual = 0.0;        ///< ||L vec(rho)||_2
  int dim = 0;
  double uniqueness_gap = 0.0;  ///< smallest singular value of the bordered system
};

struct SteadyOptions {
  /// Multiplicity is reported when the gap falls below this times max|L_ij|.
  double gap_tolerance = 1e-10;
  /// Residual bound, relative to max(1, max|L_ij|).
  double residual_tolerance = 1e-10;
  int gap_iterations = 30;
  bool estimate_gap = true;
};

/// Solves L vec(rho) = 0 with Tr rho = 1: the first row of L (the rho_00
/// equation, redundant by trace preservation) is replaced by the trace
/// functional and the square system is factorized with SparseLU.
///
/// Throws ErrorCode::solver_failure when the factorization fails or the
/// residual/state checks do not pass, ErrorCode::multiplicity when the
/// kernel of L is not one-dimensional.
SteadySolution steady_state(const Liouvillian& liouvillian, const SteadyOptions& options = {});

struct EvolveOptions {
  /// Snapshot spacing; 0 keeps only the initial and final states.
  double record_interval = 0.0;
  /// Rerun with dt/2 and require the endpoints to agree elementwise.
  bool check_convergence = false;
  double convergence_tolerance = 1e-6;
  double renormalize_threshold = 1e-10;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  int renormalizations = 0;
  double endpoint_change = 0.0;  ///< filled by the convergence check
};

/// Largest dt accepted by evolve(): 0.1 / max_i |L_ii|.
double max_stable_step(const Liouvillian& liouvillian);

/// Fixed-step classical RK4 on vec(rho) from t = 0 to t_final.
Trajectory evolve(const DensityMatrix& initial, const Liouvillian& liouvillian, double t_final,
                  double dt, const EvolveOptions& options = {});

using Observable = std::function<double(const DensityMatrix&)>;

struct SlopeOptions {
  /// Step in units of gamma1.
  double step = 1e-4;
  double richardson_tolerance = 0.01;
  double absolute_floor = 1e-9;
  /// 0 picks the truncation adaptively at the base point.
  int dim = 0;
};

struct SlopeEstimate {
  double slope = 0.0;       ///< forward stencil with step h
  double half_step = 0.0;   ///< same stencil with h/2
  int dim = 0;
};

/// d observable(rho_ss) / d kappa at kappa = 0 using the one-sided
/// second-order stencil (-3 f(0) + 4 f(h) - f(2h)) / (2h). The truncation is
/// held fixed across the stencil.
///
/// Throws ErrorCode::precondition when kappa != 0 and ErrorCode::step_size
/// when the h and h/2 estimates disagree.
SlopeEstimate kappa_slope(const ModelParams& params, const Observable& observable,
                          const SlopeOptions& options = {});

}  // namespace qvdp
