#include "qvdp/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qvdp {

namespace {

SparseMatrix kron(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  SparseMatrix out;
  Eigen::kroneckerProduct(lhs, rhs).evalTo(out);
  return out;
}

SparseMatrix dissipator_superop(const SparseMatrix& jump, const SparseMatrix& id) {
  const SparseMatrix jdj = jump.adjoint() * jump;
  const SparseMatrix jdj_t = jdj.transpose();
  return kron(jump.conjugate(), jump) - 0.5 * (kron(id, jdj) + kron(jdj_t, id));
}

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void ModelParams::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::invalid_params, msg); };
  if (!std::isfinite(delta)) fail("delta must be finite");
  if (!(std::isfinite(gamma1) && gamma1 > 0.0)) fail("gamma1 must be > 0");
  if (!(std::isfinite(gamma2) && gamma2 > 0.0)) fail("gamma2 must be > 0");
  if (!finite_nonneg(kappa)) fail("kappa must be >= 0");
  if (!finite_nonneg(omega)) fail("omega must be >= 0");
  if (!finite_nonneg(eta)) fail("eta must be >= 0");
}

DenseMatrix dissipator(const FockOperator& jump, const DensityMatrix& rho) {
  if (jump.dim() != rho.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "dissipator: operator and state dimensions differ");
  }
  const DenseMatrix l = jump.dense();
  const DenseMatrix ldl = l.adjoint() * l;
  const DenseMatrix& r = rho.matrix();
  return l * r * l.adjoint() - 0.5 * (ldl * r + r * ldl);
}

FockOperator hamiltonian(const ModelParams& params, int dim) {
  if (dim < 2) {
    throw Error(ErrorCode::invalid_dimension, "hamiltonian: dim must be >= 2");
  }
  if (params.eta != 0.0 && dim < 3) {
    throw Error(ErrorCode::invalid_dimension,
                "hamiltonian: squeezing couples |0> and |2>, needs dim >= 3");
  }
  const FockOperator a = annihilation(dim);
  const FockOperator ad = a.adjoint();
  SparseMatrix h = params.delta * number_operator(dim).sparse() +
                   params.omega * (a.sparse() + ad.sparse());
  if (params.eta != 0.0) {
    h += params.eta * SparseMatrix(a.sparse() * a.sparse() + ad.sparse() * ad.sparse());
  }
  h.prune(Complex(0.0, 0.0));
  return FockOperator(std::move(h));
}

Liouvillian::Liouvillian(int dim, SparseMatrix matrix, const ModelParams& params)
    : dim_(dim), matrix_(std::move(matrix)), params_(params) {
  const Eigen::Index n2 = static_cast<Eigen::Index>(dim) * dim;
  if (matrix_.rows() != n2 || matrix_.cols() != n2) {
    throw Error(ErrorCode::dimension_mismatch, "Liouvillian must be dim^2 x dim^2");
  }
  matrix_.makeCompressed();
}

DenseMatrix Liouvillian::apply(const DenseMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw Error(ErrorCode::dimension_mismatch, "Liouvillian::apply: dimension mismatch");
  }
  const DenseVector out = matrix_ * vectorize(rho);
  return unvectorize(out, dim_);
}

double Liouvillian::max_abs() const {
  double best = 0.0;
  for (Eigen::Index k = 0; k < matrix_.nonZeros(); ++k) {
    best = std::max(best, std::abs(matrix_.valuePtr()[k]));
  }
  return best;
}

Liouvillian build_liouvillian(const ModelParams& params, int dim) {
  params.validate();
  if (dim < 3) {
    throw Error(ErrorCode::invalid_dimension, "build_liouvillian: dim must be >= 3");
  }
  const SparseMatrix id = identity_operator(dim).sparse();
  const SparseMatrix a = annihilation(dim).sparse();
  const SparseMatrix ad = a.adjoint();
  const SparseMatrix h = hamiltonian(params, dim).sparse();
  const SparseMatrix h_t = h.transpose();
  const Complex minus_i(0.0, -1.0);

  SparseMatrix l = minus_i * (kron(id, h) - kron(h_t, id));
  l += params.gamma1 * dissipator_superop(ad, id);
  l += params.gamma2 * dissipator_superop(SparseMatrix(a * a), id);
  if (params.kappa != 0.0) {
    l += params.kappa * dissipator_superop(a, id);
  }
  l.prune(Complex(0.0, 0.0));
  return Liouvillian(dim, std::move(l), params);
}

}  // namespace qvdp
