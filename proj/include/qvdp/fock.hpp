#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "qvdp/error.hpp"

namespace qvdp {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Square operator on the truncated Fock basis |0>, ..., |N-1>.
///
/// Stored sparse; the ladder operators and every Hamiltonian built from them
/// are banded with at most five nonzero diagonals.
class FockOperator {
public:
  explicit FockOperator(SparseMatrix matrix);

  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  const SparseMatrix& sparse() const noexcept { return matrix_; }
  DenseMatrix dense() const { return DenseMatrix(matrix_); }

  FockOperator adjoint() const;

  friend FockOperator operator+(const FockOperator& lhs, const FockOperator& rhs);
  friend FockOperator operator*(const FockOperator& lhs, const FockOperator& rhs);
  friend FockOperator operator*(Complex scale, const FockOperator& op);

private:
  SparseMatrix matrix_;
};

/// a|n> = sqrt(n)|n-1>. Throws ErrorCode::invalid_dimension when dim < 2.
FockOperator annihilation(int dim);
FockOperator creation(int dim);
FockOperator number_operator(int dim);
FockOperator identity_operator(int dim);

/// Density matrix in the Fock basis. Construction only checks shape; the
/// physical invariants are reported by validate_density().
class DensityMatrix {
public:
  explicit DensityMatrix(DenseMatrix entries);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const DenseMatrix& matrix() const noexcept { return entries_; }
  Complex operator()(int m, int n) const { return entries_(m, n); }

  /// Population of level n; zero for levels beyond the truncation.
  double population(int n) const;

private:
  DenseMatrix entries_;
};

/// |n><n|.
DensityMatrix fock_projector(int dim, int n);

struct DensityTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-10;
  double min_eigenvalue = -1e-8;
};

struct DensityDiagnostics {
  double hermiticity_defect = 0.0;  ///< max |rho - rho^dagger|
  double trace_defect = 0.0;        ///< |Tr rho - 1|
  double min_eigenvalue = 0.0;      ///< of the Hermitian part
  bool violated = false;
};

DensityDiagnostics validate_density(const DenseMatrix& rho,
                                    const DensityTolerances& tol = {});
inline DensityDiagnostics validate_density(const DensityMatrix& rho,
                                           const DensityTolerances& tol = {}) {
  return validate_density(rho.matrix(), tol);
}

/// Column-stacking vectorization: vec(rho)[m + N*n] = rho(m, n).
DenseVector vectorize(const DenseMatrix& rho);
DenseMatrix unvectorize(const DenseVector& v, int dim);

}  // namespace qvdp
