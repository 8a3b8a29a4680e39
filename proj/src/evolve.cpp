#include "qvdp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <iostream>
#include <sstream>

namespace qvdp {

double max_stable_step(const Liouvillian& liouvillian) {
  const SparseMatrix& l = liouvillian.matrix();
  double fastest = 0.0;
  for (Eigen::Index k = 0; k < l.rows(); ++k) {
    fastest = std::max(fastest, std::abs(l.coeff(k, k)));
  }
  return fastest > 0.0 ? 0.1 / fastest : std::numeric_limits<double>::infinity();
}

namespace {

struct RunResult {
  Trajectory trajectory;
  DenseVector final_state;
};

Complex vec_trace(const DenseVector& v, int dim) {
  Complex tr(0.0, 0.0);
  for (int n = 0; n < dim; ++n) tr += v[n + dim * n];
  return tr;
}

RunResult integrate(const DenseVector& start, const Liouvillian& liouvillian, double t_final,
                    double dt, const EvolveOptions& options, bool record) {
  const SparseMatrix& l = liouvillian.matrix();
  const int dim = liouvillian.dim();
  const long steps = std::lround(std::ceil(t_final / dt - 1e-9));
  const double h = steps > 0 ? t_final / static_cast<double>(steps) : 0.0;

  RunResult out;
  DenseVector x = start;
  auto snapshot = [&](double t) {
    out.trajectory.times.push_back(t);
    out.trajectory.states.emplace_back(unvectorize(x, dim));
  };
  if (record) snapshot(0.0);

  double next_record = options.record_interval;
  DenseVector k1, k2, k3, k4;
  for (long step = 1; step <= steps; ++step) {
    k1 = l * x;
    k2 = l * (x + 0.5 * h * k1);
    k3 = l * (x + 0.5 * h * k2);
    k4 = l * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!x.allFinite()) {
      throw Error(ErrorCode::instability,
                  "evolve: state became non-finite at step " + std::to_string(step));
    }
    const Complex tr = vec_trace(x, dim);
    if (std::abs(tr - 1.0) > options.renormalize_threshold) {
      std::clog << "evolve: renormalizing trace drift " << std::abs(tr - 1.0) << " at t="
                << step * h << '\n';
      x /= tr;
      ++out.trajectory.renormalizations;
    }

    const double t = step * h;
    const bool due = options.record_interval > 0.0 && t + 1e-12 >= next_record;
    if (record && (due || step == steps)) {
      snapshot(t);
      while (options.record_interval > 0.0 && next_record <= t + 1e-12) {
        next_record += options.record_interval;
      }
    }
  }
  out.final_state = std::move(x);
  return out;
}

}  // namespace

Trajectory evolve(const DensityMatrix& initial, const Liouvillian& liouvillian, double t_final,
                  double dt, const EvolveOptions& options) {
  if (initial.dim() != liouvillian.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "evolve: state and Liouvillian dimensions differ");
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
    throw Error(ErrorCode::precondition, "evolve: t_final must be finite and >= 0");
  }
  const double dt_max = max_stable_step(liouvillian);
  if (!(dt > 0.0) || dt > dt_max) {
    std::ostringstream msg;
    msg << "evolve: dt " << dt << " outside (0, " << dt_max << "]";
    throw Error(ErrorCode::step_size, msg.str());
  }
  if (validate_density(initial).violated) {
    throw Error(ErrorCode::precondition, "evolve: initial state is not a valid density matrix");
  }

  const DenseVector start = vectorize(initial.matrix());
  RunResult run = integrate(start, liouvillian, t_final, dt, options, true);
  if (options.check_convergence) {
    const RunResult fine = integrate(start, liouvillian, t_final, 0.5 * dt, options, false);
    run.trajectory.endpoint_change = (fine.final_state - run.final_state).cwiseAbs().maxCoeff();
    if (run.trajectory.endpoint_change >= options.convergence_tolerance) {
      std::ostringstream msg;
      msg << "evolve: halving dt moved the endpoint by " << run.trajectory.endpoint_change;
      throw Error(ErrorCode::step_size, msg.str());
    }
  }
  return std::move(run.trajectory);
}

}  // namespace qvdp
