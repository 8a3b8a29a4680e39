#include "qvdp/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace qvdp {

namespace {

void require_dim(int dim) {
  if (dim < 2) {
    throw Error(ErrorCode::invalid_dimension,
                "Fock dimension must be >= 2, got " + std::to_string(dim));
  }
}

}  // namespace

FockOperator::FockOperator(SparseMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "Fock operator must be square");
  }
  matrix_.makeCompressed();
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(SparseMatrix(matrix_.adjoint()));
}

FockOperator operator+(const FockOperator& lhs, const FockOperator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "operator sum: dimension mismatch");
  }
  return FockOperator(SparseMatrix(lhs.matrix_ + rhs.matrix_));
}

FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "operator product: dimension mismatch");
  }
  return FockOperator(SparseMatrix(lhs.matrix_ * rhs.matrix_));
}

FockOperator operator*(Complex scale, const FockOperator& op) {
  return FockOperator(SparseMatrix(scale * op.matrix_));
}

FockOperator annihilation(int dim) {
  require_dim(dim);
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(dim - 1));
  for (int n = 1; n < dim; ++n) {
    entries.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  }
  SparseMatrix a(dim, dim);
  a.setFromTriplets(entries.begin(), entries.end());
  return FockOperator(std::move(a));
}

FockOperator creation(int dim) { return annihilation(dim).adjoint(); }

FockOperator number_operator(int dim) {
  require_dim(dim);
  std::vector<Eigen::Triplet<Complex>> entries;
  for (int n = 1; n < dim; ++n) entries.emplace_back(n, n, static_cast<double>(n));
  SparseMatrix num(dim, dim);
  num.setFromTriplets(entries.begin(), entries.end());
  return FockOperator(std::move(num));
}

FockOperator identity_operator(int dim) {
  require_dim(dim);
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return FockOperator(std::move(id));
}

DensityMatrix::DensityMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch, "density matrix must be square and non-empty");
  }
}

double DensityMatrix::population(int n) const {
  if (n < 0) throw Error(ErrorCode::index_out_of_range, "negative Fock level");
  return n < dim() ? entries_(n, n).real() : 0.0;
}

DensityMatrix fock_projector(int dim, int n) {
  require_dim(dim);
  if (n < 0 || n >= dim) {
    throw Error(ErrorCode::index_out_of_range,
                "Fock level " + std::to_string(n) + " outside [0, " +
                    std::to_string(dim) + ")");
  }
  DenseMatrix rho = DenseMatrix::Zero(dim, dim);
  rho(n, n) = 1.0;
  return DensityMatrix(std::move(rho));
}

DensityDiagnostics validate_density(const DenseMatrix& rho, const DensityTolerances& tol) {
  if (rho.rows() != rho.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "validate_density: matrix not square");
  }
  DensityDiagnostics diag;
  diag.hermiticity_defect = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  diag.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));

  const DenseMatrix hermitian_part = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(hermitian_part, Eigen::EigenvaluesOnly);
  diag.min_eigenvalue = eig.eigenvalues().minCoeff();

  diag.violated = diag.hermiticity_defect >= tol.hermiticity ||
                  diag.trace_defect >= tol.trace ||
                  diag.min_eigenvalue <= tol.min_eigenvalue;
  return diag;
}

DenseVector vectorize(const DenseMatrix& rho) {
  return Eigen::Map<const DenseVector>(rho.data(), rho.size());
}

DenseMatrix unvectorize(const DenseVector& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw Error(ErrorCode::dimension_mismatch, "unvectorize: length is not dim^2");
  }
  return Eigen::Map<const DenseMatrix>(v.data(), dim, dim);
}

}  // namespace qvdp
