#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hermnn/config.hpp"

namespace hermnn {

struct MethodRun {
  std::string method;
  std::uint64_t seed = 0;
  std::vector<double> loss_history;
  double eval_mse = 0.0;
  double wall_time_seconds = 0.0;
  std::vector<int> arch;
};

struct ExperimentResult {
  std::vector<std::string> files;
  std::string report_path;
  std::vector<MethodRun> runs;
  std::map<std::string, double> median_final_loss;
};

// train subcommand: fit the configured method, then write mse_history.csv,
// wavefunction.csv, params.csv, heatmap.svg and report.txt under out_dir.
// On a numerical failure the report records the failing iteration before the
// error propagates.
ExperimentResult run_training(const ExperimentConfig& config);

// compare subcommand: hermite_nn vs pinn across compare_seeds consecutive
// seeds, one loss-history CSV per run plus a report with the median final
// losses.
ExperimentResult run_comparison(const ExperimentConfig& config);

// solve subcommand: collocation recovery of a planted Hermite function,
// writing weights.csv and expansion_grid.csv.
ExperimentResult run_solve(const ExperimentConfig& config);

// basis subcommand: dump nodes/weights and basis values.
ExperimentResult run_basis_dump(const ExperimentConfig& config);

}  // namespace hermnn
