#include "qvdp/boost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qvdp/sync.hpp"

namespace qvdp {

double compute_M(const ModelParams& p) {
  const double g1 = p.gamma1, g2 = p.gamma2, k = p.kappa;
  const double bracket = g1 * (g2 - k) + k * (g2 + k);
  return 2.0 * p.omega * bracket * std::sqrt(4.0 * p.delta * p.delta + (k + 3.0 * g1) * (k + 3.0 * g1));
}

double compute_D(const ModelParams& p) {
  const double g1 = p.gamma1, g2 = p.gamma2, k = p.kappa;
  const double d2 = p.delta * p.delta, o2 = p.omega * p.omega;
  const double gain = g1 * (4.0 * g1 * (d2 + 4.0 * k * k + 3.0 * o2) + 15.0 * g1 * g1 * k +
                            9.0 * g1 * g1 * g1 + 4.0 * d2 * k + 7.0 * k * (k * k + 4.0 * o2));
  const double loss = k * k * (4.0 * d2 + k * k + 8.0 * o2);
  const double two_photon =
      g2 * (3.0 * g1 + k) * (6.0 * g1 * k + 9.0 * g1 * g1 + 4.0 * d2 + k * k + 8.0 * o2);
  return gain + loss + two_photon;
}

double dM_dkappa(const ModelParams& p) {
  const double g1 = p.gamma1, g2 = p.gamma2, k = p.kappa;
  const double bracket = g1 * (g2 - k) + k * (g2 + k);
  const double bracket_d = g2 - g1 + 2.0 * k;
  const double root = std::sqrt(4.0 * p.delta * p.delta + (k + 3.0 * g1) * (k + 3.0 * g1));
  return 2.0 * p.omega * (bracket_d * root + bracket * (k + 3.0 * g1) / root);
}

double dD_dkappa(const ModelParams& p) {
  const double g1 = p.gamma1, g2 = p.gamma2, k = p.kappa;
  const double d2 = p.delta * p.delta, o2 = p.omega * p.omega;
  const double gain = g1 * (32.0 * g1 * k + 15.0 * g1 * g1 + 4.0 * d2 + 21.0 * k * k + 28.0 * o2);
  const double loss = 2.0 * k * (4.0 * d2 + k * k + 8.0 * o2) + 2.0 * k * k * k;
  const double two_photon = g2 * ((6.0 * g1 * k + 9.0 * g1 * g1 + 4.0 * d2 + k * k + 8.0 * o2) +
                                  (3.0 * g1 + k) * (6.0 * g1 + 2.0 * k));
  return gain + loss + two_photon;
}

KappaDerivatives kappa_derivatives(const ModelParams& params) {
  params.validate();
  if (params.kappa != 0.0) {
    throw Error(ErrorCode::precondition, "kappa_derivatives: requires kappa = 0");
  }
  return {dM_dkappa(params), dD_dkappa(params)};
}

KappaDerivatives finite_difference_derivatives(const ModelParams& params, double step) {
  // M and D are polynomial/analytic in kappa, so the stencil may reach kappa < 0.
  ModelParams lo = params, hi = params;
  lo.kappa -= step;
  hi.kappa += step;
  return {(compute_M(hi) - compute_M(lo)) / (2.0 * step),
          (compute_D(hi) - compute_D(lo)) / (2.0 * step)};
}

double deep_quantum_criterion(const ModelParams& p) {
  const double g1 = p.gamma1;
  const double r2 = 4.0 * p.delta * p.delta + 9.0 * g1 * g1;
  const double q = r2 + 8.0 * p.omega * p.omega;
  return 2.0 * p.omega * g1 * (3.0 * q * (r2 + 3.0 * g1 * g1) - r2 * (q + 18.0 * g1 * g1)) /
         std::sqrt(r2);
}

BoostReport boost_verdict(const ModelParams& params, const BoostOptions& options) {
  params.validate();
  if (params.kappa != 0.0) {
    throw Error(ErrorCode::precondition, "boost_verdict: requires kappa = 0");
  }
  if (!(params.omega > 0.0)) {
    throw Error(ErrorCode::precondition, "boost_verdict: requires omega > 0");
  }

  BoostReport r;
  r.M = compute_M(params);
  r.D = compute_D(params);
  const KappaDerivatives closed = kappa_derivatives(params);
  r.Mprime = closed.Mprime;
  r.Dprime = closed.Dprime;

  const KappaDerivatives fd =
      finite_difference_derivatives(params, options.self_check_step * params.gamma1);
  auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
  };
  if (rel(closed.Mprime, fd.Mprime) > options.self_check_tolerance ||
      rel(closed.Dprime, fd.Dprime) > options.self_check_tolerance) {
    std::ostringstream msg;
    msg << "boost_verdict: closed-form derivatives disagree with finite differences (M' "
        << closed.Mprime << " vs " << fd.Mprime << ", D' " << closed.Dprime << " vs "
        << fd.Dprime << ")";
    throw Error(ErrorCode::solver_failure, msg.str());
  }

  const double numerator = r.Mprime * r.D - r.M * r.Dprime;
  r.s_analytic = r.M / r.D;
  r.analytic_slope = numerator / (r.D * r.D);
  r.verdict = numerator > 0.0;

  r.numeric_slope = std::numeric_limits<double>::quiet_NaN();
  if (options.run_numerics) {
    const SlopeEstimate est =
        kappa_slope(params, [](const DensityMatrix& rho) { return mrl(rho); }, options.slope);
    r.numeric_slope = est.slope;
    r.dim = est.dim;
    r.signs_agree = (est.slope > 0.0) == r.verdict;
  }
  return r;
}

}  // namespace qvdp
