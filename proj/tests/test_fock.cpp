#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qvdp/fock.hpp"

using namespace qvdp;

TEST_SUITE("fock") {

TEST_CASE("annihilation operator entries") {
  const DenseMatrix a2 = annihilation(2).dense();
  CHECK(a2(0, 1) == Complex(1.0, 0.0));
  CHECK(a2(0, 0) == Complex(0.0, 0.0));
  CHECK(a2(1, 0) == Complex(0.0, 0.0));
  CHECK(a2(1, 1) == Complex(0.0, 0.0));

  const DenseMatrix a3 = annihilation(3).dense();
  DenseMatrix expected = DenseMatrix::Zero(3, 3);
  expected(0, 1) = 1.0;
  expected(1, 2) = std::sqrt(2.0);
  CHECK((a3 - expected).cwiseAbs().maxCoeff() == 0.0);

  DenseVector ket3 = DenseVector::Zero(4);
  ket3[3] = 1.0;
  DenseVector out = annihilation(4).sparse() * ket3;
  CHECK(std::abs(out[2] - std::sqrt(3.0)) < 1e-15);
  out[2] = 0.0;
  CHECK(out.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ladder operators reject dim < 2") {
  for (int bad : {-1, 0, 1}) {
    try {
      annihilation(bad);
      FAIL("expected invalid_dimension");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::invalid_dimension);
    }
  }
}

TEST_CASE("creation is the adjoint and the number operator is a^dagger a") {
  for (int dim : {2, 5, 11}) {
    const DenseMatrix a = annihilation(dim).dense();
    const DenseMatrix ad = creation(dim).dense();
    CHECK((ad - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((number_operator(dim).dense() - ad * a).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("canonical commutator holds away from the truncation edge") {
  const int dim = 9;
  const DenseMatrix a = annihilation(dim).dense();
  const DenseMatrix comm = a * a.adjoint() - a.adjoint() * a;
  const DenseMatrix inner = comm.topLeftCorner(dim - 1, dim - 1);
  CHECK((inner - DenseMatrix::Identity(dim - 1, dim - 1)).cwiseAbs().maxCoeff() < 1e-14);
  // The last level carries the truncation defect 1 - dim.
  CHECK(std::abs(comm(dim - 1, dim - 1) - Complex(1.0 - dim, 0.0)) < 1e-13);
}

TEST_CASE("fock_projector") {
  const DensityMatrix p0 = fock_projector(3, 0);
  const DensityMatrix p2 = fock_projector(3, 2);
  DenseMatrix d0 = DenseMatrix::Zero(3, 3);
  d0(0, 0) = 1.0;
  DenseMatrix d2 = DenseMatrix::Zero(3, 3);
  d2(2, 2) = 1.0;
  CHECK((p0.matrix() - d0).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p2.matrix() - d2).cwiseAbs().maxCoeff() == 0.0);

  for (int dim : {2, 4, 7}) {
    for (int n = 0; n < dim; ++n) {
      const DenseMatrix& m = fock_projector(dim, n).matrix();
      CHECK((m * m - m).cwiseAbs().maxCoeff() < 1e-14);
    }
  }

  CHECK_THROWS_AS(fock_projector(3, 3), Error);
  CHECK_THROWS_AS(fock_projector(3, -1), Error);
  try {
    fock_projector(3, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::index_out_of_range);
  }
}

TEST_CASE("two-thirds / one-third mixture is a valid state") {
  const DenseMatrix mix =
      (2.0 / 3.0) * fock_projector(4, 0).matrix() + (1.0 / 3.0) * fock_projector(4, 1).matrix();
  const DensityDiagnostics d = validate_density(DensityMatrix(mix));
  CHECK_FALSE(d.violated);
  CHECK(d.trace_defect < 1e-15);
}

TEST_CASE("validate_density diagnostics") {
  DenseMatrix ok = DenseMatrix::Zero(2, 2);
  ok(0, 0) = 2.0 / 3.0;
  ok(1, 1) = 1.0 / 3.0;
  const DensityDiagnostics good = validate_density(ok);
  CHECK(good.hermiticity_defect == 0.0);
  CHECK(good.trace_defect < 1e-15);
  CHECK(good.min_eigenvalue > 0.0);
  CHECK_FALSE(good.violated);

  const DensityDiagnostics doubled = validate_density(DenseMatrix(DenseMatrix::Identity(2, 2)));
  CHECK(doubled.trace_defect == doctest::Approx(1.0));
  CHECK(doubled.violated);

  DenseMatrix skew = DenseMatrix::Zero(2, 2);
  skew(0, 0) = 1.0;
  skew(0, 1) = 0.1;
  const DensityDiagnostics lopsided = validate_density(skew);
  CHECK(lopsided.hermiticity_defect == doctest::Approx(0.1));
  CHECK(lopsided.violated);

  DenseMatrix negative = DenseMatrix::Zero(2, 2);
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  CHECK(validate_density(negative).min_eigenvalue == doctest::Approx(-0.1));
  CHECK(validate_density(negative).violated);
}

TEST_CASE("vectorization is column stacking and inverts cleanly") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + trial % 6;
    const DenseMatrix rho = oracle::random_density(dim, rng);
    const DenseVector v = vectorize(rho);
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) CHECK(v[m + dim * n] == rho(m, n));
    }
    CHECK((unvectorize(v, dim) - rho).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(unvectorize(DenseVector::Zero(5), 2), Error);
}

}  // TEST_SUITE
