#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qvdp/sweep.hpp"

using namespace qvdp;

namespace {

SweepSpec gamma2_sweep(int count) {
  SweepSpec spec;
  spec.axes.push_back(Axis{"gamma2", 10.0, 1000.0, count, Spacing::log});
  spec.base.gamma1 = 1.0;
  spec.drive.omega = 1.0;
  spec.outputs = {Output::mrl, Output::populations, Output::regime};
  return spec;
}

std::string render(const SweepTable& table) { return format_csv(to_csv_table(table)); }

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("axis values") {
  const std::vector<double> lin = Axis{"kappa", 0.0, 1.0, 5, Spacing::linear}.values();
  REQUIRE(lin.size() == 5);
  CHECK(lin.front() == 0.0);
  CHECK(lin[2] == doctest::Approx(0.5));
  CHECK(lin.back() == 1.0);

  const std::vector<double> lg = Axis{"gamma2", 1.0, 100.0, 3, Spacing::log}.values();
  REQUIRE(lg.size() == 3);
  CHECK(lg[1] == doctest::Approx(10.0));
  CHECK(lg.back() == doctest::Approx(100.0));
}

TEST_CASE("spec validation") {
  auto rejects = [](SweepSpec spec) {
    try {
      spec.validate();
      FAIL("expected config error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::config);
    }
  };
  SweepSpec ok = gamma2_sweep(3);
  CHECK_NOTHROW(ok.validate());

  SweepSpec none = ok;
  none.axes.clear();
  rejects(none);

  SweepSpec unknown = ok;
  unknown.axes[0].param = "gamma3";
  rejects(unknown);

  SweepSpec dup = ok;
  dup.axes.push_back(dup.axes[0]);
  rejects(dup);

  SweepSpec single = ok;
  single.axes[0].count = 1;
  rejects(single);

  SweepSpec reversed = ok;
  reversed.axes[0].min = 2000.0;
  rejects(reversed);

  SweepSpec log_zero = ok;
  log_zero.axes[0].min = 0.0;
  rejects(log_zero);

  SweepSpec no_outputs = ok;
  no_outputs.outputs.clear();
  rejects(no_outputs);

  SweepSpec threads = ok;
  threads.threads = 0;
  rejects(threads);

  SweepSpec schedule = ok;
  schedule.drive.kind = DriveMode::Kind::scheduled;
  rejects(schedule);
  schedule.drive.schedule = {{10.0, 1.0}, {5.0, 2.0}};
  rejects(schedule);

  CHECK_THROWS_AS(parse_output("bogus"), Error);
  CHECK(parse_output("boost-report") == Output::boost_report);
  CHECK(to_string(Output::squeeze_comparison) == "squeeze-comparison");
}

TEST_CASE("scheduled drive interpolates linearly") {
  DriveMode d;
  d.kind = DriveMode::Kind::scheduled;
  d.schedule = {{0.0, 1.0}, {10.0, 3.0}, {20.0, 3.0}};
  CHECK(d.omega_at(0.0) == 1.0);
  CHECK(d.omega_at(5.0) == doctest::Approx(2.0));
  CHECK(d.omega_at(15.0) == doctest::Approx(3.0));
  CHECK(d.omega_at(20.0) == 3.0);
  CHECK_THROWS_AS(d.omega_at(21.0), Error);
  CHECK_THROWS_AS(d.omega_at(-1.0), Error);
}

TEST_CASE("csv formatting") {
  CsvTable t;
  t.header = {"x", "label"};
  t.rows.push_back({0.1, std::string("plain")});
  t.rows.push_back({std::nan(""), std::string("a,b")});
  const std::string text = format_csv(t);
  CHECK(count_lines(text) == 3);
  CHECK(text == "x,label\n0.10000000000000001,plain\nnan,\"a,b\"\n");

  CHECK(format_double(-std::nan("")) == "nan");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(2.0) == "2");

  CsvTable empty;
  empty.header = {"x"};
  try {
    emit_csv(empty, std::filesystem::temp_directory_path() / "qvdp_empty.csv");
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
  try {
    emit_csv(t, std::filesystem::path("/nonexistent-dir/qvdp/out.csv"));
    FAIL("expected io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io);
  }
}

TEST_CASE("emit_csv writes the formatted table") {
  const SweepTable table = run_sweep(gamma2_sweep(2));
  const auto path = std::filesystem::temp_directory_path() / "qvdp_sweep_test.csv";
  emit_csv(table, path);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == render(table));
  std::filesystem::remove(path);
}

TEST_CASE("table layout") {
  SweepSpec spec = gamma2_sweep(3);
  spec.axes.push_back(Axis{"delta", -0.5, 0.5, 2, Spacing::linear});
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.rows.size() == 6);
  const std::vector<std::string> header = table.header();
  CHECK(header.front() == "gamma2");
  CHECK(header[1] == "delta");
  CHECK(header[2] == "mrl");
  CHECK(header.back() == "error_code");
  // First axis outermost.
  CHECK(table.rows[0].coordinates[0] == table.rows[1].coordinates[0]);
  CHECK(table.rows[0].coordinates[1] != table.rows[1].coordinates[1]);
  CHECK(count_lines(render(table)) == 7);
  CHECK(table.failed_count() == 0);
}

TEST_CASE("output is identical across thread counts") {
  SweepSpec spec = gamma2_sweep(6);
  spec.outputs.push_back(Output::ansatz_comparison);
  spec.threads = 1;
  const std::string serial = render(run_sweep(spec));
  spec.threads = 3;
  CHECK(render(run_sweep(spec)) == serial);
}

TEST_CASE("a single grid point reproduces the steady state") {
  SweepSpec spec;
  spec.axes.push_back(Axis{"gamma2", 100.0, 200.0, 2, Spacing::linear});
  spec.drive.omega = 1.0;
  spec.outputs = {Output::mrl, Output::occupation};
  const SweepTable table = run_sweep(spec);
  ModelParams p;
  p.gamma2 = 100.0;
  p.omega = 1.0;
  const TruncationResult direct = choose_truncation(p);
  CHECK(std::get<double>(table.rows[0].values[0]) == mrl(direct.solution.rho));
  CHECK(std::get<double>(table.rows[0].values[1]) == sync_metrics(direct.solution.rho).occupation);
  CHECK(table.rows[0].dim == direct.dim);
}

TEST_CASE("failed points keep their rows") {
  SweepSpec spec;
  spec.axes.push_back(Axis{"kappa", -1.0, 1.0, 3, Spacing::linear});
  spec.base.gamma2 = 100.0;
  const SweepTable table = run_sweep(spec);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.failed_count() == 1);
  CHECK(table.rows[0].error_code == "invalid_params");
  CHECK(std::isnan(std::get<double>(table.rows[0].values[0])));
  CHECK(table.rows[1].error_code.empty());
  CHECK(render(table).find("nan") != std::string::npos);

  spec.axes[0] = Axis{"kappa", -2.0, -1.0, 2, Spacing::linear};
  try {
    run_sweep(spec);
    FAIL("expected sweep_failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::sweep_failure);
  }
}

TEST_CASE("omega axis overrides the drive") {
  SweepSpec spec;
  spec.axes.push_back(Axis{"omega", 0.0, 1.0, 2, Spacing::linear});
  spec.base.gamma2 = 100.0;
  spec.drive.omega = 5.0;
  const SweepTable table = run_sweep(spec);
  CHECK(std::get<double>(table.rows[0].values[0]) < 1e-12);
  CHECK(std::get<double>(table.rows[1].values[0]) > 0.05);
}

}  // TEST_SUITE
