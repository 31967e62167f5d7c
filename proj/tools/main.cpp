#include <cstdio>
#include <cstring>
#include <iostream>
#include <stdexcept>
#include <string>

#include "hermnn/config.hpp"
#include "hermnn/errors.hpp"
#include "hermnn/experiment.hpp"

namespace {

void print_usage(std::FILE* out) {
  std::fputs(
      "usage: hermnn <subcommand> [options]\n"
      "\n"
      "subcommands:\n"
      "  basis     dump Hermite nodes, weights and basis values\n"
      "  solve     collocation recovery of a planted Hermite function\n"
      "  train     fit the configured network to the configured problem\n"
      "  compare   hermite_nn vs pinn over several seeds\n"
      "\n"
      "options:\n"
      "  --config <path>   key = value configuration file\n"
      "  --out <dir>       output directory (default: out)\n"
      "  --seed <n>        override the configured seed\n"
      "  --help            this text\n",
      out);
}

int dispatch(const std::string& subcommand, const hermnn::ExperimentConfig& cfg) {
  hermnn::ExperimentResult result;
  if (subcommand == "basis") {
    result = hermnn::run_basis_dump(cfg);
  } else if (subcommand == "solve") {
    result = hermnn::run_solve(cfg);
  } else if (subcommand == "train") {
    result = hermnn::run_training(cfg);
  } else if (subcommand == "compare") {
    result = hermnn::run_comparison(cfg);
  } else {
    std::cerr << "hermnn: unknown subcommand '" << subcommand << "'\n";
    print_usage(stderr);
    return 1;
  }
  for (const std::string& f : result.files) {
    std::cout << "wrote " << f << "\n";
  }
  if (!result.report_path.empty()) {
    std::cout << "wrote " << result.report_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    print_usage(stderr);
    return 1;
  }
  const std::string subcommand = argv[1];
  if (subcommand == "--help" || subcommand == "-h" || subcommand == "help") {
    print_usage(stdout);
    return 0;
  }

  std::string config_path;
  std::string out_dir;
  std::string seed_str;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto need_value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "hermnn: " << flag << " needs a value\n";
        std::exit(1);
      }
      return argv[++i];
    };
    if (arg == "--config") {
      config_path = need_value("--config");
    } else if (arg == "--out") {
      out_dir = need_value("--out");
    } else if (arg == "--seed") {
      seed_str = need_value("--seed");
    } else if (arg == "--help" || arg == "-h") {
      print_usage(stdout);
      return 0;
    } else {
      std::cerr << "hermnn: unknown option '" << arg << "'\n";
      print_usage(stderr);
      return 1;
    }
  }

  try {
    hermnn::ExperimentConfig cfg;
    if (!config_path.empty()) {
      cfg = hermnn::load_config_file(config_path, &std::cerr);
    }
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!seed_str.empty()) {
      size_t pos = 0;
      try {
        // stoull would wrap a leading minus
        if (seed_str[0] == '-') throw std::invalid_argument("negative");
        cfg.training.seed = std::stoull(seed_str, &pos);
      } catch (const std::exception&) {
        pos = std::string::npos;
      }
      if (pos != seed_str.size()) {
        throw hermnn::ConfigError("invalid --seed value '" + seed_str + "'");
      }
    }
    return dispatch(subcommand, cfg);
  } catch (const hermnn::ConfigError& e) {
    std::cerr << "hermnn: " << e.what() << "\n";
    return 1;
  } catch (const hermnn::NumericalError& e) {
    std::cerr << "hermnn: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hermnn: " << e.what() << "\n";
    return 2;
  }
}
