#pragma once

#include "qvdp/fock.hpp"

namespace qvdp {

/// Physical parameters of the driven, squeezed van der Pol master equation
///
///   drho/dt = -i[H, rho] + gamma1 D[a^dagger] rho + gamma2 D[a^2] rho + kappa D[a] rho,
///   H = delta a^dagger a + omega (a + a^dagger) + eta (a^2 + a^dagger^2),
///
/// in the frame rotating at the drive frequency. All entries share one
/// rate unit; the CLI works in units of gamma1.
struct ModelParams {
  double delta = 0.0;   ///< detuning
  double omega = 0.0;   ///< harmonic drive strength
  double eta = 0.0;     ///< squeezing strength
  double gamma1 = 1.0;  ///< single-photon gain
  double gamma2 = 1.0;  ///< two-photon loss
  double kappa = 0.0;   ///< single-photon loss

  /// Throws ErrorCode::invalid_params unless gamma1, gamma2 > 0 and
  /// kappa, omega, eta >= 0 (all finite).
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Mean-field limit-cycle occupation gamma1 / (2 gamma2).
inline double mean_field_occupation(const ModelParams& p) { return p.gamma1 / (2.0 * p.gamma2); }

/// D[L]rho = L rho L^dagger - 1/2 {L^dagger L, rho}.
DenseMatrix dissipator(const FockOperator& jump, const DensityMatrix& rho);

/// Requires dim >= 2, and dim >= 3 when eta != 0.
FockOperator hamiltonian(const ModelParams& params, int dim);

/// Superoperator acting on column-stacked vec(rho) (see vectorize()).
///
/// -i[H, .]  ->  -i (I (x) H - H^T (x) I)
/// D[L]      ->  conj(L) (x) L - 1/2 (I (x) L^dagger L + (L^dagger L)^T (x) I)
class Liouvillian {
public:
  Liouvillian(int dim, SparseMatrix matrix, const ModelParams& params);

  int dim() const noexcept { return dim_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  const ModelParams& params() const noexcept { return params_; }

  /// L vec(rho), reshaped back to a matrix.
  DenseMatrix apply(const DenseMatrix& rho) const;

  /// max_ij |L_ij|
  double max_abs() const;

private:
  int dim_;
  SparseMatrix matrix_;
  ModelParams params_;
};

/// Requires valid params and dim >= 3.
Liouvillian build_liouvillian(const ModelParams& params, int dim);

}  // namespace qvdp
