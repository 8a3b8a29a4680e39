#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qvdp/truncation.hpp"

namespace qvdp {

/// Mean resultant length |sum_n rho_{n,n+1}|.
double mrl(const DensityMatrix& rho);

/// |sum_n rho_{n,n+2}|: the same construction on the second superdiagonal,
/// which is where a two-fold (squeezing-induced) phase preference shows up.
double second_harmonic_mrl(const DensityMatrix& rho);

struct SyncMetrics {
  double mrl = 0.0;
  std::vector<double> coherences;   ///< |rho_{n,n+1}|
  std::vector<double> populations;  ///< p_n
  double occupation = 0.0;          ///< <a^dagger a>
  double purity = 0.0;              ///< Tr rho^2
};

SyncMetrics sync_metrics(const DensityMatrix& rho);

enum class Regime { classical, semiclassical, quantum, deep_quantum };

std::string_view to_string(Regime regime);

struct RegimeThresholds {
  double deep_quantum_p2 = 1e-2;
  double classical_occupation = 10.0;
};

struct RegimeLabel {
  Regime regime = Regime::quantum;
  double p2 = 0.0;
  double ratio = 0.0;  ///< gamma2 / gamma1
};

/// classical iff <n> exceeds thresholds.classical_occupation; otherwise
/// deep_quantum iff p2 < thresholds.deep_quantum_p2; otherwise quantum for
/// gamma2 > gamma1 and semiclassical for gamma2 <= gamma1. The occupation
/// test runs first because a large limit cycle also leaves |2> empty.
RegimeLabel classify_regime(const DensityMatrix& steady, const ModelParams& params,
                            const RegimeThresholds& thresholds = {});

struct AnsatzResult {
  DensityMatrix rho;  ///< 3x3, rho_02 = rho_12 = 0
  SyncMetrics metrics;
  std::vector<std::string> warnings;
};

/// Three-level reduced steady state: the master equation is restricted to
/// |0>, |1>, |2> with rho_02 and rho_12 set to zero. The unknowns
/// (p0, p1, p2, Re rho_01, Im rho_01) solve
///
///   0 = -2 Omega y - gamma1 p0 + 2 gamma2 p2 + kappa p1
///   0 =  2 Omega y + gamma1 (p0 - 2 p1) + kappa (2 p2 - p1)
///   0 = -delta y - G x
///   0 =  delta x + Omega (p0 - p1) - G y
///   1 =  p0 + p1 + p2
///
/// with rho_01 = x + i y and G = (3 gamma1 + kappa) / 2. Squeezing only
/// couples to the dropped coherences and therefore does not enter.
AnsatzResult ansatz_steady_state(const ModelParams& params);

struct SqueezeComparison {
  double drive_mrl = 0.0;            ///< omega = s, eta = 0
  double squeeze_mrl = 0.0;          ///< omega = 0, eta = s (zero by parity)
  double squeeze_second_harmonic = 0.0;
  double squeeze_rho02 = 0.0;
  int drive_dim = 0;
  int squeeze_dim = 0;

  /// Synchronization signal of the squeezed branch.
  double squeeze_signal() const { return squeeze_second_harmonic; }
};

/// Drive and squeezing branches at matched strength s on top of base
/// (base.omega and base.eta are overridden).
SqueezeComparison squeeze_vs_drive(const ModelParams& base, double strength, int fixed_dim = 0,
                                   const TruncationOptions& options = {});

/// gamma1 = 1, gamma2 = ratio, kappa = 0.
SqueezeComparison squeeze_vs_drive(double ratio, double strength, double delta);

}  // namespace qvdp
