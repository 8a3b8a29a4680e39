#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qvdp/boost.hpp"
#include "qvdp/sync.hpp"

using namespace qvdp;

namespace {

/// Superdiagonal sum written out element by element.
double superdiagonal_modulus(const DenseMatrix& rho) {
  double re = 0.0, im = 0.0;
  for (Eigen::Index n = 0; n + 1 < rho.rows(); ++n) {
    re += rho(n, n + 1).real();
    im += rho(n, n + 1).imag();
  }
  return std::hypot(re, im);
}

ModelParams driven(double gamma2, double omega = 1.0) {
  ModelParams p;
  p.gamma2 = gamma2;
  p.omega = omega;
  return p;
}

}  // namespace

TEST_SUITE("sync") {

TEST_CASE("mrl examples") {
  DenseMatrix diag = DenseMatrix::Zero(5, 5);
  diag.diagonal() << 0.4, 0.3, 0.2, 0.05, 0.05;
  CHECK(mrl(DensityMatrix(diag)) == 0.0);

  DenseMatrix plus = DenseMatrix::Constant(2, 2, 0.5);
  CHECK(mrl(DensityMatrix(plus)) == doctest::Approx(0.5).epsilon(1e-15));

  const TruncationResult r = choose_truncation(driven(100.0));
  CHECK(mrl(r.solution.rho) == superdiagonal_modulus(r.solution.rho.matrix()));
}

TEST_CASE("mrl is invariant under phase rotation and bounded") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + trial % 9;
    const DenseMatrix rho = oracle::random_density(dim, rng);
    const double theta = angle(rng);
    DenseMatrix u = DenseMatrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) u(n, n) = std::polar(1.0, -theta * n);
    const DenseMatrix rotated = u * rho * u.adjoint();
    CHECK(std::abs(mrl(DensityMatrix(rotated)) - mrl(DensityMatrix(rho))) < 1e-12);

    const SyncMetrics m = sync_metrics(DensityMatrix(rho));
    double coherence_sum = 0.0;
    for (double c : m.coherences) coherence_sum += c;
    CHECK(m.mrl >= 0.0);
    CHECK(m.mrl <= 1.0);
    CHECK(m.mrl <= coherence_sum + 1e-15);
    double total = 0.0;
    for (double p : m.populations) total += p;
    CHECK(std::abs(total - 1.0) < 1e-10);
    CHECK(m.purity <= 1.0 + 1e-12);
  }
}

TEST_CASE("sync metrics of a coherent superposition") {
  DenseMatrix plus = DenseMatrix::Constant(2, 2, 0.5);
  const SyncMetrics m = sync_metrics(DensityMatrix(plus));
  CHECK(m.occupation == doctest::Approx(0.5));
  CHECK(m.purity == doctest::Approx(1.0));
  REQUIRE(m.coherences.size() == 1);
  CHECK(m.coherences[0] == doctest::Approx(0.5));
}

TEST_CASE("regime classification") {
  DenseMatrix deep = DenseMatrix::Zero(6, 6);
  deep(0, 0) = 2.0 / 3.0;
  deep(1, 1) = 1.0 / 3.0;
  ModelParams p;
  p.gamma2 = 1e4;
  CHECK(classify_regime(DensityMatrix(deep), p).regime == Regime::deep_quantum);

  ModelParams classical;
  classical.gamma2 = 1.0 / 40.0;
  const TruncationResult c = choose_truncation(classical);
  const RegimeLabel cl = classify_regime(c.solution.rho, classical);
  CHECK(cl.regime == Regime::classical);
  CHECK(cl.ratio == doctest::Approx(1.0 / 40.0));

  ModelParams squeezed;
  squeezed.gamma2 = 3.0;
  squeezed.eta = 1.0;
  const TruncationResult s = choose_truncation(squeezed);
  const RegimeLabel sl = classify_regime(s.solution.rho, squeezed);
  CHECK(sl.regime != Regime::deep_quantum);
  CHECK(sl.p2 > 1e-2);
  CHECK(sl.regime == Regime::quantum);

  ModelParams semi;
  semi.gamma2 = 0.5;
  const TruncationResult m = choose_truncation(semi);
  CHECK(classify_regime(m.solution.rho, semi).regime == Regime::semiclassical);

  RegimeThresholds strict;
  strict.deep_quantum_p2 = 1e-6;
  CHECK(classify_regime(DensityMatrix(deep), p, strict).regime == Regime::deep_quantum);
  const TruncationResult d100 = choose_truncation(driven(100.0));
  CHECK(classify_regime(d100.solution.rho, driven(100.0), strict).regime == Regime::quantum);
}

TEST_CASE("regime label never leaves deep-quantum as gamma2/gamma1 grows") {
  for (double omega : {0.3, 1.0}) {
    bool reached = false;
    for (double ratio : {0.5, 1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0, 1e4}) {
      const ModelParams p = driven(ratio, omega);
      const TruncationResult r = choose_truncation(p);
      const bool deep = classify_regime(r.solution.rho, p).regime == Regime::deep_quantum;
      if (reached) CHECK_MESSAGE(deep, "ratio " << ratio);
      reached = reached || deep;
    }
    CHECK(reached);
  }
}

TEST_CASE("ansatz examples") {
  ModelParams p;
  p.gamma2 = 1e4;
  const AnsatzResult deep = ansatz_steady_state(p);
  CHECK(std::abs(deep.metrics.populations[0] - 2.0 / 3.0) < 1e-3);
  CHECK(std::abs(deep.metrics.populations[1] - 1.0 / 3.0) < 1e-3);
  CHECK(deep.metrics.mrl == 0.0);
  CHECK(deep.warnings.empty());

  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    ModelParams q = oracle::random_params(rng);
    q.omega = 0.0;
    const AnsatzResult r = ansatz_steady_state(q);
    CHECK(std::abs(r.rho(0, 1)) == 0.0);
    CHECK(r.metrics.mrl == 0.0);
  }

  ModelParams low;
  low.gamma2 = 0.5;
  low.eta = 0.2;
  CHECK(ansatz_steady_state(low).warnings.size() == 2);
}

TEST_CASE("ansatz structure and agreement with full numerics at gamma2/gamma1 = 100") {
  const ModelParams p = driven(100.0);
  const AnsatzResult a = ansatz_steady_state(p);
  CHECK(a.rho.dim() == 3);
  CHECK(a.rho(0, 2) == Complex(0.0, 0.0));
  CHECK(a.rho(1, 2) == Complex(0.0, 0.0));
  CHECK_FALSE(validate_density(a.rho).violated);

  const TruncationResult full = choose_truncation(p);
  const DensityMatrix& rho = full.solution.rho;
  CHECK(std::abs(rho(1, 2)) / std::abs(rho(0, 1)) < 0.5);
  // Populations agree within 5% where p2 is small.
  for (int n = 0; n < 3; ++n) {
    CHECK(std::abs(a.metrics.populations[n] - rho.population(n)) <
          0.05 * rho.population(n));
  }
}

TEST_CASE("ansatz populations track full numerics when p2 < 1e-2 and omega <= gamma1") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    ModelParams p;
    p.gamma2 = std::exp(std::log(20.0) + u(rng) * std::log(500.0));
    p.omega = u(rng);
    p.delta = 2.0 * u(rng) - 1.0;
    const TruncationResult full = choose_truncation(p);
    if (full.solution.rho.population(2) >= 1e-2) continue;
    ++checked;
    const AnsatzResult a = ansatz_steady_state(p);
    for (int n = 0; n < 2; ++n) {
      const double ref = full.solution.rho.population(n);
      CHECK_MESSAGE(std::abs(a.metrics.populations[n] - ref) < 0.05 * ref,
                    "gamma2=" << p.gamma2 << " omega=" << p.omega << " n=" << n);
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("ansatz coherence equals the closed-form ratio M/D") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const ModelParams p = oracle::random_params(rng);
    const double ansatz = ansatz_steady_state(p).metrics.mrl;
    const double closed = compute_M(p) / compute_D(p);
    CHECK(std::abs(ansatz - closed) < 1e-12 * std::max(1.0, closed));
  }
}

TEST_CASE("squeeze_vs_drive") {
  SUBCASE("zero strength gives zero signal") {
    const SqueezeComparison c = squeeze_vs_drive(3.0, 0.0, 0.0);
    CHECK(c.drive_mrl < 1e-12);
    CHECK(c.squeeze_mrl < 1e-12);
    CHECK(c.squeeze_signal() < 1e-12);
    CHECK(c.squeeze_rho02 < 1e-12);
  }
  SUBCASE("squeezing leaves the first superdiagonal empty") {
    const SqueezeComparison c = squeeze_vs_drive(3.0, 1.0, 0.0);
    CHECK(c.squeeze_mrl < 1e-12);
    CHECK(c.squeeze_rho02 > 0.0);
    CHECK(c.squeeze_second_harmonic >= c.squeeze_rho02 - 1e-12);
  }
  SUBCASE("driving wins deep in the quantum regime") {
    const SqueezeComparison c = squeeze_vs_drive(100.0, 1.0, 0.0);
    CHECK(c.drive_mrl > c.squeeze_signal());
    CHECK(c.drive_mrl > c.squeeze_rho02);
  }
  SUBCASE("negative strength is rejected") {
    CHECK_THROWS_AS(squeeze_vs_drive(3.0, -1.0, 0.0), Error);
  }
}

}  // TEST_SUITE
