#include "qvdp/sync.hpp"

#include <cmath>

namespace qvdp {

AnsatzResult ansatz_steady_state(const ModelParams& params) {
  params.validate();
  const double g1 = params.gamma1;
  const double g2 = params.gamma2;
  const double k = params.kappa;
  const double om = params.omega;
  const double de = params.delta;
  const double coherence_decay = 0.5 * (3.0 * g1 + k);

  // Unknown order: p0, p1, p2, x = Re rho_01, y = Im rho_01.
  Eigen::Matrix<double, 5, 5> a;
  Eigen::Matrix<double, 5, 1> b;
  a << -g1, k, 2.0 * g2, 0.0, -2.0 * om,
       g1, -2.0 * g1 - k, 2.0 * k, 0.0, 2.0 * om,
       0.0, 0.0, 0.0, -coherence_decay, -de,
       om, -om, 0.0, de, -coherence_decay,
       1.0, 1.0, 1.0, 0.0, 0.0;
  b << 0.0, 0.0, 0.0, 0.0, 1.0;

  const Eigen::FullPivLU<Eigen::Matrix<double, 5, 5>> lu(a);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::ansatz_failure, "ansatz_steady_state: reduced system is singular");
  }
  const Eigen::Matrix<double, 5, 1> sol = lu.solve(b);
  if (!sol.allFinite()) {
    throw Error(ErrorCode::ansatz_failure, "ansatz_steady_state: non-finite solution");
  }

  DenseMatrix rho = DenseMatrix::Zero(3, 3);
  rho(0, 0) = sol[0];
  rho(1, 1) = sol[1];
  rho(2, 2) = sol[2];
  rho(0, 1) = Complex(sol[3], sol[4]);
  rho(1, 0) = std::conj(rho(0, 1));

  AnsatzResult out{DensityMatrix(std::move(rho)), {}, {}};
  out.metrics = sync_metrics(out.rho);
  if (g2 <= g1) {
    out.warnings.emplace_back("gamma2 <= gamma1: three-level ansatz is outside the quantum regime");
  }
  if (params.eta != 0.0) {
    out.warnings.emplace_back("squeezing acts only through the dropped coherences and is ignored");
  }
  return out;
}

}  // namespace qvdp
