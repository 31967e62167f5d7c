#include "hermnn/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hermnn/errors.hpp"
#include "hermnn/hermite.hpp"

namespace hermnn {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    fail(line, "invalid number for '" + key + "': '" + v + "'");
  }
  if (pos != v.size()) fail(line, "trailing characters in '" + key + "': '" + v + "'");
  if (!std::isfinite(out)) fail(line, "non-finite value for '" + key + "'");
  return out;
}

long long parse_int(const std::string& v, int line, const std::string& key) {
  size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    fail(line, "invalid integer for '" + key + "': '" + v + "'");
  }
  if (pos != v.size()) fail(line, "trailing characters in '" + key + "': '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& v, int line, const std::string& key) {
  // stoull would silently wrap a leading minus
  if (!v.empty() && v[0] == '-') {
    fail(line, "'" + key + "' must be non-negative: '" + v + "'");
  }
  size_t pos = 0;
  std::uint64_t out = 0;
  try {
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    fail(line, "invalid seed for '" + key + "': '" + v + "'");
  }
  if (pos != v.size()) fail(line, "trailing characters in '" + key + "': '" + v + "'");
  return out;
}

bool parse_bool(const std::string& v, int line, const std::string& key) {
  if (v == "true") return true;
  if (v == "false") return false;
  fail(line, "expected true or false for '" + key + "', got '" + v + "'");
}

std::vector<int> parse_arch(const std::string& v, int line,
                            const std::string& key) {
  std::vector<int> arch;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) fail(line, "empty entry in '" + key + "'");
    arch.push_back(static_cast<int>(parse_int(item, line, key)));
  }
  if (arch.size() < 2) fail(line, "'" + key + "' needs at least 2 layers");
  if (arch.front() != 2) fail(line, "'" + key + "' must start with input width 2");
  if (arch.back() != 1) fail(line, "'" + key + "' must end with output width 1");
  for (int w : arch) {
    if (w < 1) fail(line, "'" + key + "' has a non-positive width");
  }
  return arch;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text,
                              std::ostream* diagnostics) {
  ExperimentConfig cfg;
  std::set<std::string> seen;
  std::stringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;

    const size_t eq = entry.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) fail(line, "missing key");
    if (value.empty()) fail(line, "missing value for '" + key + "'");

    if (!seen.insert(key).second && diagnostics) {
      *diagnostics << "config line " << line << ": duplicate key '" << key
                   << "', last value wins\n";
    }

    if (key == "method") {
      if (value == "hermite_nn") cfg.method = Method::hermite_nn;
      else if (value == "pinn") cfg.method = Method::pinn;
      else if (value == "collocation") cfg.method = Method::collocation;
      else fail(line, "unknown method '" + value + "'");
    } else if (key == "problem") {
      if (value != "box" && value != "oscillator") {
        fail(line, "unknown problem '" + value + "'");
      }
      cfg.problem = value;
    } else if (key == "mass") {
      cfg.mass = parse_double(value, line, key);
      if (!(cfg.mass > 0.0)) fail(line, "mass must be > 0");
    } else if (key == "hbar") {
      cfg.hbar = parse_double(value, line, key);
      if (!(cfg.hbar > 0.0)) fail(line, "hbar must be > 0");
    } else if (key == "omega") {
      cfg.omega = parse_double(value, line, key);
      if (!(cfg.omega > 0.0)) fail(line, "omega must be > 0");
    } else if (key == "v0") {
      cfg.v0 = parse_double(value, line, key);
    } else if (key == "box_length") {
      cfg.box_length = parse_double(value, line, key);
      if (!(cfg.box_length > 0.0)) fail(line, "box_length must be > 0");
    } else if (key == "nx") {
      cfg.nx = static_cast<int>(parse_int(value, line, key));
      if (cfg.nx < 1) fail(line, "nx must be >= 1");
    } else if (key == "ny") {
      cfg.ny = static_cast<int>(parse_int(value, line, key));
      if (cfg.ny < 1) fail(line, "ny must be >= 1");
    } else if (key == "arch") {
      cfg.arch = parse_arch(value, line, key);
    } else if (key == "pinn_arch") {
      cfg.pinn_arch = parse_arch(value, line, key);
    } else if (key == "hermite_degree") {
      cfg.hermite_degree = static_cast<int>(parse_int(value, line, key));
      if (cfg.hermite_degree < 0 || cfg.hermite_degree > kMaxHermiteDegree) {
        fail(line, "hermite_degree outside [0, 64]");
      }
    } else if (key == "iterations") {
      cfg.training.iterations = static_cast<int>(parse_int(value, line, key));
      if (cfg.training.iterations < 0) fail(line, "iterations must be >= 0");
    } else if (key == "optimizer") {
      if (value == "adam") cfg.training.optimizer = OptimizerKind::adam;
      else if (value == "sgd") cfg.training.optimizer = OptimizerKind::sgd;
      else fail(line, "unknown optimizer '" + value + "'");
    } else if (key == "learning_rate") {
      cfg.training.learning_rate = parse_double(value, line, key);
      if (!(cfg.training.learning_rate > 0.0)) {
        fail(line, "learning_rate must be > 0");
      }
      cfg.learning_rate_given = true;
    } else if (key == "beta1") {
      cfg.training.beta1 = parse_double(value, line, key);
      if (!(cfg.training.beta1 > 0.0 && cfg.training.beta1 < 1.0)) {
        fail(line, "beta1 must lie in (0, 1)");
      }
    } else if (key == "beta2") {
      cfg.training.beta2 = parse_double(value, line, key);
      if (!(cfg.training.beta2 > 0.0 && cfg.training.beta2 < 1.0)) {
        fail(line, "beta2 must lie in (0, 1)");
      }
    } else if (key == "epsilon") {
      cfg.training.epsilon = parse_double(value, line, key);
      if (!(cfg.training.epsilon > 0.0)) fail(line, "epsilon must be > 0");
    } else if (key == "batch") {
      if (value == "full") cfg.training.batch = BatchMode::full;
      else if (value == "stochastic") cfg.training.batch = BatchMode::stochastic;
      else fail(line, "unknown batch mode '" + value + "'");
    } else if (key == "batch_size") {
      cfg.training.batch_size = static_cast<int>(parse_int(value, line, key));
      if (cfg.training.batch_size < 1) fail(line, "batch_size must be >= 1");
    } else if (key == "loss_mode") {
      if (value == "supervised") cfg.training.loss_mode = LossMode::supervised;
      else if (value == "residual") cfg.training.loss_mode = LossMode::residual;
      else fail(line, "unknown loss_mode '" + value + "'");
    } else if (key == "stop_tol") {
      cfg.training.stop_tol = parse_double(value, line, key);
      if (cfg.training.stop_tol < 0.0) fail(line, "stop_tol must be >= 0");
    } else if (key == "seed") {
      cfg.training.seed = parse_u64(value, line, key);
    } else if (key == "basis_size") {
      cfg.basis_size = static_cast<int>(parse_int(value, line, key));
      if (cfg.basis_size < 1 || cfg.basis_size + 1 > kMaxHermiteDegree) {
        fail(line, "basis_size outside [1, 63]");
      }
    } else if (key == "expansion_degree") {
      cfg.expansion_degree = static_cast<int>(parse_int(value, line, key));
      if (cfg.expansion_degree < 0 || cfg.expansion_degree > kMaxHermiteDegree) {
        fail(line, "expansion_degree outside [0, 64]");
      }
    } else if (key == "plant_degree") {
      cfg.plant_degree = static_cast<int>(parse_int(value, line, key));
      if (cfg.plant_degree < 0 || cfg.plant_degree > kMaxHermiteDegree) {
        fail(line, "plant_degree outside [0, 64]");
      }
    } else if (key == "operator") {
      if (value != "identity" && value != "laplacian") {
        fail(line, "unknown operator '" + value + "'");
      }
      cfg.collocation_operator = value;
    } else if (key == "resolution") {
      cfg.resolution = static_cast<int>(parse_int(value, line, key));
      if (cfg.resolution < 2) fail(line, "resolution must be >= 2");
    } else if (key == "compare_seeds") {
      cfg.compare_seeds = static_cast<int>(parse_int(value, line, key));
      if (cfg.compare_seeds < 1) fail(line, "compare_seeds must be >= 1");
    } else if (key == "heatmap") {
      cfg.heatmap = parse_bool(value, line, key);
    } else if (key == "out_dir") {
      cfg.out_dir = value;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }

  if (!cfg.learning_rate_given) {
    cfg.training.learning_rate =
        (cfg.training.optimizer == OptimizerKind::adam) ? 0.01 : 0.001;
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path,
                                  std::ostream* diagnostics) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), diagnostics);
}

Problem make_problem(const ExperimentConfig& config) {
  if (config.problem == "oscillator") {
    return oscillator_problem(config.mass, config.hbar, config.omega,
                              config.v0);
  }
  return box_problem(config.box_length, config.nx, config.ny, config.mass,
                     config.hbar);
}

}  // namespace hermnn
