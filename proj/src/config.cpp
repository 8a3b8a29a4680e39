#include "qvdp/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qvdp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::config, msg); }

int as_int(const std::string& key, double v) {
  if (!std::isfinite(v) || std::floor(v) != v) fail("config: '" + key + "' must be an integer");
  return static_cast<int>(v);
}

void set_flat(RunConfig& c, const std::string& key, double v) {
  if (is_model_param(key)) {
    set_model_param(c.params, key, v);
    if (key == "omega") c.omega_explicit = true;
  } else if (key == "dim") {
    c.dim = as_int(key, v);
  } else if (key == "max_dim") {
    c.truncation.max_dim = as_int(key, v);
  } else if (key == "tail_tolerance") {
    c.truncation.tail_tolerance = v;
  } else if (key == "t_final") {
    c.t_final = v;
  } else if (key == "dt") {
    c.dt = v;
  } else if (key == "record_interval") {
    c.record_interval = v;
  } else if (key == "initial_fock") {
    c.initial_fock = as_int(key, v);
  } else if (key == "strength") {
    c.strength = v;
  } else if (key == "deep_quantum_p2") {
    c.thresholds.deep_quantum_p2 = v;
  } else if (key == "classical_occupation") {
    c.thresholds.classical_occupation = v;
  } else if (key == "threads") {
    c.threads = as_int(key, v);
  } else if (key == "population_columns") {
    c.population_columns = as_int(key, v);
  } else {
    fail("config: unknown key '" + key + "'");
  }
}

Spacing parse_spacing(const std::string& s) {
  if (s == "linear") return Spacing::linear;
  if (s == "log") return Spacing::log;
  fail("config: spacing must be 'linear' or 'log', got '" + s + "'");
}

void apply_sweep(RunConfig& c, const json& sweep) {
  if (!sweep.is_object()) fail("config: 'sweep' must be an object");
  for (const auto& [key, value] : sweep.items()) {
    if (key == "axes") {
      c.axes.clear();
      for (const json& a : value) {
        Axis axis;
        axis.param = a.at("param").get<std::string>();
        axis.min = a.at("min").get<double>();
        axis.max = a.at("max").get<double>();
        axis.count = a.at("count").get<int>();
        axis.spacing = parse_spacing(a.value("spacing", std::string("linear")));
        c.axes.push_back(axis);
      }
    } else if (key == "drive") {
      DriveMode drive;
      const std::string mode = value.value("mode", std::string("fixed"));
      if (mode == "fixed") {
        drive.kind = DriveMode::Kind::fixed;
        drive.omega = value.contains("omega") ? value.at("omega").get<double>()
                                             : std::nan("");
      } else if (mode == "scheduled") {
        drive.kind = DriveMode::Kind::scheduled;
        for (const json& entry : value.at("table")) {
          if (!entry.is_array() || entry.size() != 2) {
            fail("config: drive table entries must be [sweep_value, omega] pairs");
          }
          drive.schedule.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
      } else {
        fail("config: drive mode must be 'fixed' or 'scheduled'");
      }
      c.drive = drive;
    } else if (key == "outputs") {
      c.outputs.clear();
      for (const json& o : value) c.outputs.push_back(parse_output(o.get<std::string>()));
    } else {
      fail("config: unknown sweep key '" + key + "'");
    }
  }
}

}  // namespace

SweepSpec RunConfig::sweep_spec() const {
  SweepSpec spec;
  spec.axes = axes;
  spec.base = params;
  if (drive) spec.drive = *drive;
  if (spec.drive.kind == DriveMode::Kind::fixed && (!drive || std::isnan(drive->omega))) {
    spec.drive.omega = omega_explicit ? params.omega : params.gamma1;
  }
  if (!outputs.empty()) spec.outputs = outputs;
  spec.fixed_dim = dim;
  spec.population_columns = population_columns;
  spec.threads = threads;
  spec.truncation = truncation;
  spec.thresholds = thresholds;
  return spec;
}

Axis parse_axis(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 4 || parts.size() > 5) {
    fail("axis '" + text + "': expected name:min:max:count[:linear|log]");
  }
  Axis axis;
  axis.param = parts[0];
  try {
    std::size_t used = 0;
    axis.min = std::stod(parts[1]);
    axis.max = std::stod(parts[2]);
    axis.count = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument("count");
  } catch (const std::exception&) {
    fail("axis '" + text + "': malformed number");
  }
  if (parts.size() == 5) axis.spacing = parse_spacing(parts[4]);
  return axis;
}

void apply_json(RunConfig& config, const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config: top level must be an object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "sweep") {
        apply_sweep(config, value);
      } else if (value.is_number()) {
        set_flat(config, key, value.get<double>());
      } else {
        fail("config: key '" + key + "' must be a number");
      }
    }
  } catch (const json::exception& e) {
    fail(std::string("config: ") + e.what());
  }
}

void apply_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) fail("--set expects key=value, got '" + assignment + "'");
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    fail("--set " + key + ": '" + text + "' is not a number");
  }
  set_flat(config, key, value);
}

RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const std::vector<std::string>& overrides) {
  RunConfig config;
  if (path) {
    std::ifstream file(*path);
    if (!file) fail("config file not found: " + path->string());
    std::stringstream buf;
    buf << file.rdbuf();
    apply_json(config, buf.str());
  }
  for (const std::string& o : overrides) apply_override(config, o);
  return config;
}

}  // namespace qvdp
