#pragma once

#include "qvdp/lindblad.hpp"
#include "qvdp/solvers.hpp"

namespace qvdp {

/// Closed-form numerator of the reduced-model synchronization measure:
///   M = 2 Omega [g1 (g2 - k) + k (g2 + k)] sqrt(4 delta^2 + (k + 3 g1)^2)
double compute_M(const ModelParams& params);

/// Closed-form denominator:
///   D = g1 [4 g1 (delta^2 + 4 k^2 + 3 Omega^2) + 15 g1^2 k + 9 g1^3 + 4 delta^2 k
///           + 7 k (k^2 + 4 Omega^2)]
///       + k^2 (4 delta^2 + k^2 + 8 Omega^2)
///       + g2 (3 g1 + k) (6 g1 k + 9 g1^2 + 4 delta^2 + k^2 + 8 Omega^2)
double compute_D(const ModelParams& params);

/// dM/dkappa and dD/dkappa at the kappa stored in params.
double dM_dkappa(const ModelParams& params);
double dD_dkappa(const ModelParams& params);

struct KappaDerivatives {
  double Mprime = 0.0;
  double Dprime = 0.0;
};

/// (M', D') at kappa = 0. Throws ErrorCode::precondition otherwise.
KappaDerivatives kappa_derivatives(const ModelParams& params);

/// Central differences of compute_M / compute_D in kappa around params.kappa.
KappaDerivatives finite_difference_derivatives(const ModelParams& params, double step);

/// Leading large-gamma2 coefficient of M' D - M D' (the gamma2^2 term) at
/// kappa = 0. Positive for every Omega > 0.
double deep_quantum_criterion(const ModelParams& params);

struct BoostOptions {
  bool run_numerics = true;
  double self_check_step = 1e-6;       ///< units of gamma1
  double self_check_tolerance = 1e-5;  ///< relative
  SlopeOptions slope = {};
};

struct BoostReport {
  double M = 0.0;
  double D = 0.0;
  double Mprime = 0.0;
  double Dprime = 0.0;
  double s_analytic = 0.0;      ///< M / D
  double analytic_slope = 0.0;  ///< (M' D - M D') / D^2
  bool verdict = false;         ///< M' D - M D' > 0
  double numeric_slope = 0.0;   ///< NaN when numerics are skipped
  bool signs_agree = false;
  int dim = 0;
};

/// Requires kappa = 0 and Omega > 0. The closed-form derivatives are checked
/// against finite differences on every call.
BoostReport boost_verdict(const ModelParams& params, const BoostOptions& options = {});

}  // namespace qvdp
