#include "qvdp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qvdp/truncation.hpp"

namespace qvdp {

SlopeEstimate kappa_slope(const ModelParams& params, const Observable& observable,
                          const SlopeOptions& options) {
  params.validate();
  if (params.kappa != 0.0) {
    throw Error(ErrorCode::precondition, "kappa_slope: base point must have kappa = 0");
  }
  if (!(options.step > 0.0)) {
    throw Error(ErrorCode::step_size, "kappa_slope: step must be > 0");
  }

  const TruncationResult base = solve_steady(params, options.dim);
  const int dim = base.dim;
  auto at = [&](double kappa) {
    ModelParams p = params;
    p.kappa = kappa;
    return observable(steady_state(build_liouvillian(p, dim)).rho);
  };

  const double h = options.step * params.gamma1;
  const double f0 = observable(base.solution.rho);
  const double f_h2 = at(0.5 * h);
  const double f_h = at(h);
  const double f_2h = at(2.0 * h);

  SlopeEstimate est;
  est.dim = dim;
  est.slope = (-3.0 * f0 + 4.0 * f_h - f_2h) / (2.0 * h);
  est.half_step = (-3.0 * f0 + 4.0 * f_h2 - f_h) / h;

  const double diff = std::abs(est.slope - est.half_step);
  const double scale = std::max(std::abs(est.slope), std::abs(est.half_step));
  if (diff > options.richardson_tolerance * scale && diff > options.absolute_floor) {
    std::ostringstream msg;
    msg << "kappa_slope: step h gives " << est.slope << ", h/2 gives " << est.half_step;
    throw Error(ErrorCode::step_size, msg.str());
  }
  return est;
}

}  // namespace qvdp
