#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qvdp/csv.hpp"
#include "qvdp/sync.hpp"

namespace qvdp {

enum class Spacing { linear, log };

struct Axis {
  std::string param;  ///< one of delta, omega, eta, gamma1, gamma2, kappa
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  Spacing spacing = Spacing::linear;

  std::vector<double> values() const;
};

/// Drive amplitude per grid point. Fixed uses `omega`; scheduled linearly
/// interpolates omega from (first-axis value, omega) pairs.
struct DriveMode {
  enum class Kind { fixed, scheduled } kind = Kind::fixed;
  double omega = 1.0;
  std::vector<std::pair<double, double>> schedule;

  double omega_at(double coordinate) const;
};

enum class Output {
  mrl,
  populations,
  occupation,
  purity,
  boost_report,
  ansatz_comparison,
  regime,
  squeeze_comparison,
};

std::string_view to_string(Output output);
Output parse_output(std::string_view name);
bool is_model_param(std::string_view name);
void set_model_param(ModelParams& params, std::string_view name, double value);

struct SweepSpec {
  std::vector<Axis> axes;
  ModelParams base;
  DriveMode drive;
  std::vector<Output> outputs{Output::mrl};
  int fixed_dim = 0;  ///< 0: adaptive truncation per point
  int population_columns = 4;
  int threads = 1;
  TruncationOptions truncation = {};
  RegimeThresholds thresholds = {};

  /// Throws ErrorCode::config on malformed axes or outputs.
  void validate() const;
};

struct SweepRow {
  std::vector<double> coordinates;
  std::vector<Cell> values;
  int dim = 0;
  double residual = 0.0;
  std::string error_code;  ///< empty on success
  std::string error_message;
};

struct SweepTable {
  std::vector<std::string> axis_names;
  std::vector<std::string> value_columns;
  std::vector<SweepRow> rows;

  std::vector<std::string> header() const;
  std::size_t failed_count() const;
};

/// Column names produced for the requested outputs, in emission order.
std::vector<std::string> value_columns(const SweepSpec& spec);

/// One row per grid point, first axis outermost. Failed points keep their
/// row with NaN values and an error code; throws ErrorCode::sweep_failure
/// when every point fails.
SweepTable run_sweep(const SweepSpec& spec);

/// Coordinates, value columns, then dim, residual and error_code.
CsvTable to_csv_table(const SweepTable& table);

inline void emit_csv(const SweepTable& table, const std::filesystem::path& path) {
  emit_csv(to_csv_table(table), path);
}

}  // namespace qvdp
