#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qvdp/sweep.hpp"

namespace qvdp {

/// Everything the CLI reads from a JSON config plus --set overrides.
///
/// Flat keys: delta, omega, eta, gamma1, gamma2, kappa, dim, max_dim,
/// tail_tolerance, t_final, dt, record_interval, initial_fock, strength,
/// deep_quantum_p2, classical_occupation, threads, population_columns.
/// A "sweep" object holds "axes", "drive" and "outputs".
struct RunConfig {
  ModelParams params{.delta = 0.0, .omega = 0.0, .eta = 0.0, .gamma1 = 1.0, .gamma2 = 1e4,
                     .kappa = 0.0};
  bool omega_explicit = false;
  int dim = 0;
  TruncationOptions truncation = {};
  double t_final = 10.0;
  double dt = 0.0;  ///< 0: max_stable_step()
  double record_interval = 0.0;
  int initial_fock = 0;
  double strength = 1.0;
  RegimeThresholds thresholds = {};
  int threads = 1;
  int population_columns = 4;

  std::vector<Axis> axes;
  std::optional<DriveMode> drive;
  std::vector<Output> outputs;

  /// Sweep description; fixed drive defaults to omega (when set) or gamma1.
  SweepSpec sweep_spec() const;
};

/// Parses "name:min:max:count[:linear|log]".
Axis parse_axis(const std::string& text);

void apply_json(RunConfig& config, const std::string& json_text);
void apply_override(RunConfig& config, const std::string& assignment);

/// Throws ErrorCode::config when the file is missing or malformed.
RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const std::vector<std::string>& overrides);

}  // namespace qvdp
