#include "qvdp/sync.hpp"

#include <cmath>

namespace qvdp {

namespace {

Complex superdiagonal_sum(const DensityMatrix& rho, int offset) {
  Complex sum(0.0, 0.0);
  for (int n = 0; n + offset < rho.dim(); ++n) sum += rho(n, n + offset);
  return sum;
}

}  // namespace

double mrl(const DensityMatrix& rho) { return std::abs(superdiagonal_sum(rho, 1)); }

double second_harmonic_mrl(const DensityMatrix& rho) {
  return std::abs(superdiagonal_sum(rho, 2));
}

SyncMetrics sync_metrics(const DensityMatrix& rho) {
  SyncMetrics m;
  const int dim = rho.dim();
  m.mrl = mrl(rho);
  m.populations.reserve(static_cast<std::size_t>(dim));
  for (int n = 0; n < dim; ++n) {
    m.populations.push_back(rho(n, n).real());
    m.occupation += n * rho(n, n).real();
  }
  for (int n = 0; n + 1 < dim; ++n) m.coherences.push_back(std::abs(rho(n, n + 1)));
  m.purity = (rho.matrix() * rho.matrix()).trace().real();
  return m;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::classical: return "classical";
    case Regime::semiclassical: return "semiclassical";
    case Regime::quantum: return "quantum";
    case Regime::deep_quantum: return "deep-quantum";
  }
  return "unknown";
}

RegimeLabel classify_regime(const DensityMatrix& steady, const ModelParams& params,
                            const RegimeThresholds& thresholds) {
  RegimeLabel label;
  label.p2 = steady.population(2);
  label.ratio = params.gamma2 / params.gamma1;
  double occupation = 0.0;
  for (int n = 0; n < steady.dim(); ++n) occupation += n * steady(n, n).real();

  if (occupation > thresholds.classical_occupation) {
    label.regime = Regime::classical;
  } else if (label.p2 < thresholds.deep_quantum_p2) {
    label.regime = Regime::deep_quantum;
  } else {
    label.regime = label.ratio > 1.0 ? Regime::quantum : Regime::semiclassical;
  }
  return label;
}

SqueezeComparison squeeze_vs_drive(const ModelParams& base, double strength, int fixed_dim,
                                   const TruncationOptions& options) {
  if (!(strength >= 0.0) || !std::isfinite(strength)) {
    throw Error(ErrorCode::invalid_params, "squeeze_vs_drive: strength must be >= 0");
  }
  ModelParams drive = base;
  drive.omega = strength;
  drive.eta = 0.0;
  ModelParams squeeze = base;
  squeeze.omega = 0.0;
  squeeze.eta = strength;

  const TruncationResult d = solve_steady(drive, fixed_dim, options);
  const TruncationResult s = solve_steady(squeeze, fixed_dim, options);

  SqueezeComparison out;
  out.drive_mrl = mrl(d.solution.rho);
  out.squeeze_mrl = mrl(s.solution.rho);
  out.squeeze_second_harmonic = second_harmonic_mrl(s.solution.rho);
  out.squeeze_rho02 = std::abs(s.solution.rho(0, 2));
  out.drive_dim = d.dim;
  out.squeeze_dim = s.dim;
  return out;
}

SqueezeComparison squeeze_vs_drive(double ratio, double strength, double delta) {
  ModelParams base;
  base.gamma1 = 1.0;
  base.gamma2 = ratio;
  base.delta = delta;
  return squeeze_vs_drive(base, strength);
}

}  // namespace qvdp
