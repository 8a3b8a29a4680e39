#include "qvdp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "qvdp/boost.hpp"

namespace qvdp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NamedParam {
  std::string_view name;
  double ModelParams::*field;
};

constexpr NamedParam kParams[] = {
    {"delta", &ModelParams::delta},   {"omega", &ModelParams::omega},
    {"eta", &ModelParams::eta},       {"gamma1", &ModelParams::gamma1},
    {"gamma2", &ModelParams::gamma2}, {"kappa", &ModelParams::kappa},
};

constexpr std::pair<Output, std::string_view> kOutputs[] = {
    {Output::mrl, "mrl"},
    {Output::populations, "populations"},
    {Output::occupation, "occupation"},
    {Output::purity, "purity"},
    {Output::boost_report, "boost-report"},
    {Output::ansatz_comparison, "ansatz-comparison"},
    {Output::regime, "regime"},
    {Output::squeeze_comparison, "squeeze-comparison"},
};

bool needs_steady_state(const SweepSpec& spec) {
  for (Output o : spec.outputs) {
    if (o != Output::boost_report && o != Output::squeeze_comparison) return true;
  }
  return false;
}

/// Grid index -> per-axis indices, first axis outermost.
std::vector<std::size_t> unravel(std::size_t flat, const std::vector<std::vector<double>>& grid) {
  std::vector<std::size_t> idx(grid.size());
  for (std::size_t a = grid.size(); a-- > 0;) {
    idx[a] = flat % grid[a].size();
    flat /= grid[a].size();
  }
  return idx;
}

void evaluate_point(const SweepSpec& spec, SweepRow& row) {
  ModelParams params = spec.base;
  bool omega_on_axis = false;
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    set_model_param(params, spec.axes[a].param, row.coordinates[a]);
    omega_on_axis = omega_on_axis || spec.axes[a].param == "omega";
  }
  if (!omega_on_axis) params.omega = spec.drive.omega_at(row.coordinates.front());
  params.validate();

  row.residual = kNaN;
  std::optional<TruncationResult> steady;
  if (needs_steady_state(spec)) {
    steady = solve_steady(params, spec.fixed_dim, spec.truncation);
    row.dim = steady->dim;
    row.residual = steady->solution.residual;
  }

  for (Output o : spec.outputs) {
    switch (o) {
      case Output::mrl:
        row.values.emplace_back(mrl(steady->solution.rho));
        break;
      case Output::populations:
        for (int n = 0; n < spec.population_columns; ++n) {
          row.values.emplace_back(steady->solution.rho.population(n));
        }
        break;
      case Output::occupation:
        row.values.emplace_back(sync_metrics(steady->solution.rho).occupation);
        break;
      case Output::purity:
        row.values.emplace_back(sync_metrics(steady->solution.rho).purity);
        break;
      case Output::boost_report: {
        BoostOptions opts;
        opts.slope.dim = spec.fixed_dim;
        const BoostReport r = boost_verdict(params, opts);
        for (double v : {r.M, r.D, r.Mprime, r.Dprime, r.s_analytic, r.analytic_slope,
                         r.verdict ? 1.0 : 0.0, r.numeric_slope}) {
          row.values.emplace_back(v);
        }
        if (!steady) row.dim = r.dim;
        break;
      }
      case Output::ansatz_comparison: {
        const AnsatzResult a = ansatz_steady_state(params);
        const DensityMatrix& full = steady->solution.rho;
        row.values.emplace_back(a.metrics.mrl);
        row.values.emplace_back(a.metrics.populations[0]);
        row.values.emplace_back(a.metrics.populations[1]);
        row.values.emplace_back(a.metrics.populations[2]);
        row.values.emplace_back(mrl(full));
        row.values.emplace_back(std::abs(full(1, 2)) / std::abs(full(0, 1)));
        break;
      }
      case Output::regime: {
        const RegimeLabel label = classify_regime(steady->solution.rho, params, spec.thresholds);
        row.values.emplace_back(std::string(to_string(label.regime)));
        row.values.emplace_back(label.p2);
        break;
      }
      case Output::squeeze_comparison: {
        const SqueezeComparison c =
            squeeze_vs_drive(params, params.omega, spec.fixed_dim, spec.truncation);
        row.values.emplace_back(c.drive_mrl);
        row.values.emplace_back(c.squeeze_mrl);
        row.values.emplace_back(c.squeeze_second_harmonic);
        row.values.emplace_back(c.squeeze_rho02);
        if (!steady) row.dim = c.drive_dim;
        break;
      }
    }
  }
}

void mark_failed(SweepRow& row, const SweepSpec& spec, std::string code, std::string message) {
  row.values.clear();
  for (const std::string& col : value_columns(spec)) {
    if (col == "regime") {
      row.values.emplace_back(std::string());
    } else {
      row.values.emplace_back(kNaN);
    }
  }
  row.dim = 0;
  row.residual = kNaN;
  row.error_code = std::move(code);
  row.error_message = std::move(message);
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out[i] = spacing == Spacing::linear
                 ? min + t * (max - min)
                 : std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
  }
  out.front() = min;
  out.back() = max;
  return out;
}

double DriveMode::omega_at(double coordinate) const {
  if (kind == Kind::fixed) return omega;
  if (schedule.empty()) throw Error(ErrorCode::config, "scheduled drive: empty table");
  if (coordinate < schedule.front().first || coordinate > schedule.back().first) {
    std::ostringstream msg;
    msg << "scheduled drive: coordinate " << coordinate << " outside table range ["
        << schedule.front().first << ", " << schedule.back().first << "]";
    throw Error(ErrorCode::precondition, msg.str());
  }
  auto hi = std::lower_bound(schedule.begin(), schedule.end(), coordinate,
                             [](const auto& entry, double x) { return entry.first < x; });
  if (hi->first == coordinate || hi == schedule.begin()) return hi->second;
  const auto lo = hi - 1;
  const double t = (coordinate - lo->first) / (hi->first - lo->first);
  return lo->second + t * (hi->second - lo->second);
}

std::string_view to_string(Output output) {
  for (const auto& [o, name] : kOutputs) {
    if (o == output) return name;
  }
  return "unknown";
}

Output parse_output(std::string_view name) {
  for (const auto& [o, n] : kOutputs) {
    if (n == name) return o;
  }
  throw Error(ErrorCode::config, "unknown output '" + std::string(name) + "'");
}

bool is_model_param(std::string_view name) {
  return std::any_of(std::begin(kParams), std::end(kParams),
                     [&](const NamedParam& p) { return p.name == name; });
}

void set_model_param(ModelParams& params, std::string_view name, double value) {
  for (const NamedParam& p : kParams) {
    if (p.name == name) {
      params.*(p.field) = value;
      return;
    }
  }
  throw Error(ErrorCode::config, "unknown model parameter '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::config, msg); };
  if (axes.empty()) fail("sweep: at least one axis is required");
  if (outputs.empty()) fail("sweep: no outputs requested");
  std::set<std::string> seen;
  for (const Axis& axis : axes) {
    if (!is_model_param(axis.param)) fail("sweep: unknown axis parameter '" + axis.param + "'");
    if (!seen.insert(axis.param).second) fail("sweep: duplicate axis '" + axis.param + "'");
    if (axis.count < 2) fail("sweep: axis '" + axis.param + "' needs count >= 2");
    if (!(axis.min < axis.max)) fail("sweep: axis '" + axis.param + "' needs min < max");
    if (axis.spacing == Spacing::log && !(axis.min > 0.0)) {
      fail("sweep: log axis '" + axis.param + "' needs min > 0");
    }
  }
  if (drive.kind == DriveMode::Kind::scheduled) {
    if (drive.schedule.empty()) fail("sweep: scheduled drive needs a table");
    for (std::size_t i = 1; i < drive.schedule.size(); ++i) {
      if (!(drive.schedule[i - 1].first < drive.schedule[i].first)) {
        fail("sweep: drive schedule must be strictly increasing in the sweep value");
      }
    }
  }
  if (population_columns < 1) fail("sweep: population_columns must be >= 1");
  if (threads < 1) fail("sweep: threads must be >= 1");
}

std::vector<std::string> value_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (Output o : spec.outputs) {
    switch (o) {
      case Output::mrl: cols.emplace_back("mrl"); break;
      case Output::populations:
        for (int n = 0; n < spec.population_columns; ++n) cols.push_back("p" + std::to_string(n));
        break;
      case Output::occupation: cols.emplace_back("occupation"); break;
      case Output::purity: cols.emplace_back("purity"); break;
      case Output::boost_report:
        cols.insert(cols.end(), {"M", "D", "Mprime", "Dprime", "s_analytic", "analytic_slope",
                                 "verdict", "numeric_slope"});
        break;
      case Output::ansatz_comparison:
        cols.insert(cols.end(), {"ansatz_mrl", "ansatz_p0", "ansatz_p1", "ansatz_p2", "full_mrl",
                                 "rho12_over_rho01"});
        break;
      case Output::regime: cols.insert(cols.end(), {"regime", "p2"}); break;
      case Output::squeeze_comparison:
        cols.insert(cols.end(), {"drive_mrl", "squeeze_mrl", "squeeze_second_harmonic",
                                 "squeeze_rho02"});
        break;
    }
  }
  return cols;
}

std::vector<std::string> SweepTable::header() const {
  std::vector<std::string> h = axis_names;
  h.insert(h.end(), value_columns.begin(), value_columns.end());
  h.insert(h.end(), {"dim", "residual", "error_code"});
  return h;
}

std::size_t SweepTable::failed_count() const {
  return static_cast<std::size_t>(std::count_if(
      rows.begin(), rows.end(), [](const SweepRow& r) { return !r.error_code.empty(); }));
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();

  std::vector<std::vector<double>> grid;
  std::size_t total = 1;
  SweepTable table;
  for (const Axis& axis : spec.axes) {
    grid.push_back(axis.values());
    total *= grid.back().size();
    table.axis_names.push_back(axis.param);
  }
  table.value_columns = value_columns(spec);
  table.rows.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      SweepRow& row = table.rows[i];
      const auto idx = unravel(i, grid);
      for (std::size_t a = 0; a < grid.size(); ++a) row.coordinates.push_back(grid[a][idx[a]]);
      try {
        evaluate_point(spec, row);
      } catch (const Error& e) {
        mark_failed(row, spec, std::string(to_string(e.code())), e.what());
      } catch (const std::exception& e) {
        mark_failed(row, spec, "internal", e.what());
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::size_t>(spec.threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  if (table.failed_count() == total) {
    throw Error(ErrorCode::sweep_failure,
                "sweep: all " + std::to_string(total) + " points failed; first error: " +
                    table.rows.front().error_message);
  }
  return table;
}

CsvTable to_csv_table(const SweepTable& table) {
  CsvTable csv;
  csv.header = table.header();
  for (const SweepRow& row : table.rows) {
    std::vector<Cell> cells(row.coordinates.begin(), row.coordinates.end());
    cells.insert(cells.end(), row.values.begin(), row.values.end());
    cells.emplace_back(static_cast<double>(row.dim));
    cells.emplace_back(row.residual);
    cells.emplace_back(row.error_code);
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

}  // namespace qvdp
