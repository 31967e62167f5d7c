#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "hermnn/train.hpp"

namespace hermnn {

enum class Method { hermite_nn, pinn, collocation };

// Line-oriented key = value configuration.  '#' starts a comment, blank
// lines are skipped, unknown keys are rejected, duplicate keys warn and the
// last value wins.  Keys and defaults:
//
//   method            hermite_nn | pinn | collocation     (hermite_nn)
//   problem           box | oscillator                    (box)
//   mass              1.0        hbar      1.0
//   omega             1.0        v0        1.0
//   box_length        1.0        nx  1     ny  1
//   arch              2,15,15,15,15,15,1
//   pinn_arch         2,18,18,18,18,18,1
//   hermite_degree    5        activation degree cap D
//   iterations        1000
//   optimizer         adam | sgd                          (adam)
//   learning_rate     0.01 for adam, 0.001 for sgd
//   beta1 0.9   beta2 0.999   epsilon 1e-8
//   batch             full | stochastic                   (full)
//   batch_size        16       used by stochastic mode
//   loss_mode         supervised | residual               (supervised)
//   stop_tol          0 (disabled)
//   seed              42
//   basis_size        9        M: training grid is the (M+1)^2 tensor grid
//   expansion_degree  8        N for the collocation method
//   plant_degree      2        collocation manufactured solution H_k~
//   operator          identity | laplacian                (identity)
//   resolution        20       evaluation grid is R x R
//   compare_seeds     5
//   heatmap           true | false                        (true)
//   out_dir           out
struct ExperimentConfig {
  Method method = Method::hermite_nn;
  std::string problem = "box";
  double mass = 1.0;
  double hbar = 1.0;
  double omega = 1.0;
  double v0 = 1.0;
  double box_length = 1.0;
  int nx = 1;
  int ny = 1;
  std::vector<int> arch = {2, 15, 15, 15, 15, 15, 1};
  std::vector<int> pinn_arch = {2, 18, 18, 18, 18, 18, 1};
  int hermite_degree = 5;
  TrainingConfig training;
  bool learning_rate_given = false;
  int basis_size = 9;
  int expansion_degree = 8;
  int plant_degree = 2;
  std::string collocation_operator = "identity";
  int resolution = 20;
  int compare_seeds = 5;
  bool heatmap = true;
  std::string out_dir = "out";
};

// diagnostics receives duplicate-key warnings; may be null.
ExperimentConfig parse_config(const std::string& text,
                              std::ostream* diagnostics = nullptr);

ExperimentConfig load_config_file(const std::string& path,
                                  std::ostream* diagnostics = nullptr);

Problem make_problem(const ExperimentConfig& config);

}  // namespace hermnn
