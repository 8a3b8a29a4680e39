#include "qvdp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/SparseLU>

namespace qvdp {

namespace {

/// L with its first row replaced by the trace functional sum_n vec[n + N n].
SparseMatrix bordered_system(const Liouvillian& liouvillian) {
  const SparseMatrix& l = liouvillian.matrix();
  const int dim = liouvillian.dim();
  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(l.nonZeros() + dim));
  for (Eigen::Index col = 0; col < l.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(l, col); it; ++it) {
      if (it.row() != 0) entries.emplace_back(it.row(), it.col(), it.value());
    }
  }
  for (int n = 0; n < dim; ++n) {
    entries.emplace_back(0, n + dim * n, Complex(1.0, 0.0));
  }
  SparseMatrix a(l.rows(), l.cols());
  a.setFromTriplets(entries.begin(), entries.end());
  a.makeCompressed();
  return a;
}

/// Inverse iteration on (A^H A)^{-1}; converges to sigma_min from above.
double smallest_singular_value(Eigen::SparseLU<SparseMatrix>& lu, Eigen::Index size,
                               int iterations) {
  DenseVector v(size);
  for (Eigen::Index k = 0; k < size; ++k) {
    v[k] = Complex(1.0 + 0.5 * std::sin(0.7 * static_cast<double>(k)),
                   0.25 * std::cos(1.3 * static_cast<double>(k)));
  }
  v.normalize();
  double growth = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const DenseVector w = lu.adjoint().solve(v);
    DenseVector u = lu.solve(w);
    growth = u.norm();
    if (!std::isfinite(growth) || growth == 0.0) return 0.0;
    v = u / growth;
  }
  return 1.0 / std::sqrt(growth);
}

}  // namespace

SteadySolution steady_state(const Liouvillian& liouvillian, const SteadyOptions& options) {
  const int dim = liouvillian.dim();
  const SparseMatrix system = bordered_system(liouvillian);

  Eigen::SparseLU<SparseMatrix> lu;
  lu.analyzePattern(system);
  lu.factorize(system);
  if (lu.info() != Eigen::Success) {
    throw Error(ErrorCode::solver_failure,
                "steady_state: sparse LU factorization failed (" + lu.lastErrorMessage() + ")");
  }

  DenseVector rhs = DenseVector::Zero(system.rows());
  rhs[0] = 1.0;
  const DenseVector x = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !x.allFinite()) {
    throw Error(ErrorCode::solver_failure, "steady_state: solve produced non-finite values");
  }

  const double scale = liouvillian.max_abs();
  double gap = 0.0;
  if (options.estimate_gap) {
    gap = smallest_singular_value(lu, system.rows(), options.gap_iterations);
    if (gap < options.gap_tolerance * scale) {
      std::ostringstream msg;
      msg << "steady_state: kernel is not one-dimensional (gap " << gap << " vs |L|max "
          << scale << ")";
      throw Error(ErrorCode::multiplicity, msg.str());
    }
  }

  const double residual = (liouvillian.matrix() * x).norm();
  if (!(residual < options.residual_tolerance * std::max(1.0, scale))) {
    std::ostringstream msg;
    msg << "steady_state: residual " << residual << " exceeds tolerance";
    throw Error(ErrorCode::solver_failure, msg.str());
  }

  DensityMatrix rho(unvectorize(x, dim));
  const DensityDiagnostics diag = validate_density(rho);
  if (diag.violated) {
    std::ostringstream msg;
    msg << "steady_state: invalid density matrix (hermiticity " << diag.hermiticity_defect
        << ", trace " << diag.trace_defect << ", min eigenvalue " << diag.min_eigenvalue << ")";
    throw Error(ErrorCode::solver_failure, msg.str());
  }
  return SteadySolution{std::move(rho), residual, dim, gap};
}

}  // namespace qvdp
