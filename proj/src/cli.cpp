#include "qvdp/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qvdp/boost.hpp"
#include "qvdp/config.hpp"

namespace qvdp {

namespace {

namespace fs = std::filesystem;

constexpr const char* kOutputDirEnv = "QVDP_OUTPUT_DIR";

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::vector<std::string> axes;
  std::string outputs;
};

/// --out wins; relative paths and the per-command default land in
/// $QVDP_OUTPUT_DIR when it is set.
std::optional<fs::path> resolve_output(const std::string& out_path, const std::string& command) {
  const char* env = std::getenv(kOutputDirEnv);
  if (!out_path.empty()) {
    fs::path p(out_path);
    if (p.is_relative() && env && *env) return fs::path(env) / p;
    return p;
  }
  if (env && *env) return fs::path(env) / (command + ".csv");
  return std::nullopt;
}

RunConfig read_config(const CommonArgs& args) {
  std::optional<fs::path> path;
  if (!args.config_path.empty()) path = args.config_path;
  return load_config(path, args.overrides);
}

void print_params(std::ostream& out, const ModelParams& p) {
  out << "params: delta=" << p.delta << " omega=" << p.omega << " eta=" << p.eta
      << " gamma1=" << p.gamma1 << " gamma2=" << p.gamma2 << " kappa=" << p.kappa << '\n';
}

int run_steady(const CommonArgs& args, std::ostream& out) {
  const RunConfig cfg = read_config(args);
  const TruncationResult res = solve_steady(cfg.params, cfg.dim, cfg.truncation);
  const DensityMatrix& rho = res.solution.rho;
  const SyncMetrics m = sync_metrics(rho);
  const RegimeLabel label = classify_regime(rho, cfg.params, cfg.thresholds);

  print_params(out, cfg.params);
  out << "steady state: dim " << res.dim << ", residual " << res.solution.residual
      << ", uniqueness gap " << res.solution.uniqueness_gap << '\n';
  out << std::fixed << std::setprecision(6);
  for (int n = 0; n < std::min(rho.dim(), 6); ++n) {
    out << "  p" << n << " = " << m.populations[n] << '\n';
  }
  out << "  <n>    = " << m.occupation << '\n'
      << "  mrl    = " << m.mrl << '\n'
      << "  purity = " << m.purity << '\n'
      << "  regime = " << to_string(label.regime) << " (p2 = " << label.p2 << ")\n";

  if (auto path = resolve_output(args.out_path, "steady")) {
    CsvTable csv{{"n", "population", "coherence_re", "coherence_im"}, {}};
    for (int n = 0; n < rho.dim(); ++n) {
      const Complex c = n + 1 < rho.dim() ? rho(n, n + 1) : Complex(0.0, 0.0);
      csv.rows.push_back({static_cast<double>(n), m.populations[n], c.real(), c.imag()});
    }
    emit_csv(csv, *path);
    out << "wrote " << path->string() << '\n';
  }
  return 0;
}

int run_evolve(const CommonArgs& args, std::ostream& out) {
  const RunConfig cfg = read_config(args);
  const TruncationResult steady = solve_steady(cfg.params, cfg.dim, cfg.truncation);
  const Liouvillian l = build_liouvillian(cfg.params, steady.dim);
  const double dt = cfg.dt > 0.0 ? cfg.dt : max_stable_step(l);
  EvolveOptions opts;
  opts.record_interval = cfg.record_interval > 0.0 ? cfg.record_interval : cfg.t_final / 200.0;
  const Trajectory traj =
      evolve(fock_projector(steady.dim, cfg.initial_fock), l, cfg.t_final, dt, opts);

  const DensityMatrix& last = traj.states.back();
  const double distance = (last.matrix() - steady.solution.rho.matrix()).cwiseAbs().maxCoeff();
  print_params(out, cfg.params);
  out << "evolve: dim " << steady.dim << ", dt " << dt << ", t_final " << cfg.t_final << ", "
      << traj.times.size() << " snapshots, " << traj.renormalizations << " renormalizations\n";
  out << std::setprecision(10) << "  final mrl = " << mrl(last)
      << "\n  final <n> = " << sync_metrics(last).occupation
      << "\n  max |rho(t_final) - rho_ss| = " << distance << '\n';

  if (auto path = resolve_output(args.out_path, "evolve")) {
    CsvTable csv{{"t", "trace", "mrl", "occupation", "purity", "p0", "p1", "p2"}, {}};
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const DensityMatrix& rho = traj.states[i];
      const SyncMetrics m = sync_metrics(rho);
      csv.rows.push_back({traj.times[i], rho.matrix().trace().real(), m.mrl, m.occupation,
                          m.purity, rho.population(0), rho.population(1), rho.population(2)});
    }
    emit_csv(csv, *path);
    out << "wrote " << path->string() << '\n';
  }
  return 0;
}

int run_boost(const CommonArgs& args, std::ostream& out) {
  const RunConfig cfg = read_config(args);
  BoostOptions opts;
  opts.slope.dim = cfg.dim;
  const BoostReport r = boost_verdict(cfg.params, opts);
  print_params(out, cfg.params);
  out << std::setprecision(10) << "  M  = " << r.M << "\n  D  = " << r.D << "\n  M' = " << r.Mprime
      << "\n  D' = " << r.Dprime << "\n  S_analytic = M/D = " << r.s_analytic
      << "\n  analytic slope dS/dkappa = " << r.analytic_slope
      << "\n  numeric slope dS/dkappa  = " << r.numeric_slope << " (dim " << r.dim << ")"
      << "\n  verdict (M'/M > D'/D) = " << (r.verdict ? "true" : "false")
      << "\n  signs agree = " << (r.signs_agree ? "true" : "false") << '\n';
  if (auto path = resolve_output(args.out_path, "boost")) {
    CsvTable csv{{"M", "D", "Mprime", "Dprime", "s_analytic", "analytic_slope", "verdict",
                  "numeric_slope", "dim"},
                 {{r.M, r.D, r.Mprime, r.Dprime, r.s_analytic, r.analytic_slope,
                   r.verdict ? 1.0 : 0.0, r.numeric_slope, static_cast<double>(r.dim)}}};
    emit_csv(csv, *path);
    out << "wrote " << path->string() << '\n';
  }
  return 0;
}

int run_ansatz(const CommonArgs& args, std::ostream& out) {
  const RunConfig cfg = read_config(args);
  const AnsatzResult a = ansatz_steady_state(cfg.params);
  const TruncationResult full = solve_steady(cfg.params, cfg.dim, cfg.truncation);
  const DensityMatrix& rho = full.solution.rho;
  const double full_mrl = mrl(rho);
  const double ratio = std::abs(rho(1, 2)) / std::abs(rho(0, 1));

  print_params(out, cfg.params);
  for (const std::string& w : a.warnings) out << "warning: " << w << '\n';
  out << std::setprecision(10) << "three-level ansatz: p0 = " << a.metrics.populations[0]
      << ", p1 = " << a.metrics.populations[1] << ", p2 = " << a.metrics.populations[2]
      << "\n  rho01 = " << a.rho(0, 1) << "\n  ansatz mrl = " << a.metrics.mrl
      << "\n  full mrl   = " << full_mrl << " (dim " << full.dim << ")"
      << "\n  relative difference = " << std::abs(a.metrics.mrl - full_mrl) / full_mrl
      << "\n  full |rho12|/|rho01| = " << ratio << '\n';
  if (auto path = resolve_output(args.out_path, "ansatz")) {
    CsvTable csv{{"ansatz_p0", "ansatz_p1", "ansatz_p2", "ansatz_mrl", "full_mrl",
                  "rho12_over_rho01", "dim"},
                 {{a.metrics.populations[0], a.metrics.populations[1], a.metrics.populations[2],
                   a.metrics.mrl, full_mrl, ratio, static_cast<double>(full.dim)}}};
    emit_csv(csv, *path);
    out << "wrote " << path->string() << '\n';
  }
  return 0;
}

int run_regimes(const CommonArgs& args, std::ostream& out) {
  const RunConfig cfg = read_config(args);
  const TruncationResult res = solve_steady(cfg.params, cfg.dim, cfg.truncation);
  const RegimeLabel label = classify_regime(res.solution.rho, cfg.params, cfg.thresholds);
  const SqueezeComparison c = squeeze_vs_drive(cfg.params, cfg.strength, cfg.dim, cfg.truncation);

  print_params(out, cfg.params);
  out << std::setprecision(10) << "regime: " << to_string(label.regime) << " (gamma2/gamma1 = "
      << label.ratio << ", p2 = " << label.p2
      << ", <n> = " << sync_metrics(res.solution.rho).occupation << ")\n"
      << "squeeze vs drive at strength " << cfg.strength << ":\n"
      << "  drive mrl                 = " << c.drive_mrl << '\n'
      << "  squeeze mrl               = " << c.squeeze_mrl << '\n'
      << "  squeeze |sum rho_n,n+2|   = " << c.squeeze_second_harmonic << '\n'
      << "  squeeze |rho02|           = " << c.squeeze_rho02 << '\n'
      << "  stronger signal: " << (c.squeeze_signal() > c.drive_mrl ? "squeezing" : "driving")
      << '\n';
  if (auto path = resolve_output(args.out_path, "regimes")) {
    CsvTable csv{{"regime", "p2", "ratio", "drive_mrl", "squeeze_mrl", "squeeze_second_harmonic",
                  "squeeze_rho02"},
                 {{std::string(to_string(label.regime)), label.p2, label.ratio, c.drive_mrl,
                   c.squeeze_mrl, c.squeeze_second_harmonic, c.squeeze_rho02}}};
    emit_csv(csv, *path);
    out << "wrote " << path->string() << '\n';
  }
  return 0;
}

int run_sweep_command(const CommonArgs& args, std::ostream& out) {
  RunConfig cfg = read_config(args);
  if (!args.axes.empty()) {
    cfg.axes.clear();
    for (const std::string& a : args.axes) cfg.axes.push_back(parse_axis(a));
  }
  if (!args.outputs.empty()) {
    cfg.outputs.clear();
    std::stringstream ss(args.outputs);
    for (std::string name; std::getline(ss, name, ',');) cfg.outputs.push_back(parse_output(name));
  }
  const SweepSpec spec = cfg.sweep_spec();
  const SweepTable table = run_sweep(spec);
  const std::optional<fs::path> path = resolve_output(args.out_path, "sweep");
  if (path) {
    emit_csv(table, *path);
    out << "sweep: " << table.rows.size() << " points, " << table.failed_count() << " failed\n"
        << "wrote " << path->string() << '\n';
  } else {
    out << format_csv(to_csv_table(table));
  }
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::config:
    case ErrorCode::invalid_params:
    case ErrorCode::precondition:
    case ErrorCode::io:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum van der Pol synchronization toolkit"};
  app.name("qvdp");
  app.require_subcommand(1);

  CommonArgs args;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", args.config_path, "JSON config file");
    sub->add_option("-s,--set", args.overrides, "Override a config key (key=value)")
        ->allow_extra_args(false);
    sub->add_option("-o,--out", args.out_path, "Data output path (CSV)");
  };

  auto* steady = app.add_subcommand("steady", "Steady state and its synchronization metrics");
  auto* evolve_cmd = app.add_subcommand("evolve", "RK4 time evolution from a Fock state");
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  auto* boost = app.add_subcommand("boost", "Closed-form noise-boost criterion vs numerics");
  auto* ansatz = app.add_subcommand("ansatz", "Three-level ansatz vs full numerics");
  auto* regimes = app.add_subcommand("regimes", "Regime label and squeezing vs driving");
  for (CLI::App* sub : {steady, evolve_cmd, sweep, boost, ansatz, regimes}) add_common(sub);
  sweep->add_option("-a,--axis", args.axes, "Axis name:min:max:count[:linear|log]")
      ->allow_extra_args(false);
  sweep->add_option("--outputs", args.outputs, "Comma-separated outputs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*steady) return run_steady(args, out);
    if (*evolve_cmd) return run_evolve(args, out);
    if (*sweep) return run_sweep_command(args, out);
    if (*boost) return run_boost(args, out);
    if (*ansatz) return run_ansatz(args, out);
    if (*regimes) return run_regimes(args, out);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace qvdp
