#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hermnn/collocation.hpp"
#include "hermnn/network.hpp"
#include "hermnn/problems.hpp"

namespace hermnn {

enum class OptimizerKind { sgd, adam };
enum class BatchMode { full, stochastic };
enum class LossMode { supervised, residual };

struct TrainingConfig {
  int iterations = 1000;
  double learning_rate = 0.01;
  OptimizerKind optimizer = OptimizerKind::adam;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  BatchMode batch = BatchMode::full;
  int batch_size = 16;
  LossMode loss_mode = LossMode::supervised;
  std::uint64_t seed = 42;
  // Stop when the parameter-update norm drops below this; 0 disables.
  double stop_tol = 0.0;
};

double mse(std::span<const double> predicted, std::span<const double> actual);

// Mean squared Schrodinger residual of the model over the points, evaluated
// with the finite-difference Laplacian.
double residual_loss(const std::function<double(double, double)>& model,
                     const Problem& problem, std::span<const Point2> points);

Eigen::VectorXd sgd_step(const Eigen::VectorXd& w, const Eigen::VectorXd& grad,
                         double learning_rate);

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  long step = 0;
};

AdamState make_adam_state(int size);

Eigen::VectorXd adam_step(AdamState& state, const Eigen::VectorXd& w,
                          const Eigen::VectorXd& grad, double learning_rate,
                          double beta1, double beta2, double epsilon);

// Minibatch index selection; depends on (seed, iteration) only, so a run can
// be reproduced from its config.
std::vector<int> batch_indices(std::uint64_t seed, int iteration,
                               int batch_size, int point_count);

struct TrainingTrace {
  std::vector<double> loss_history;
  NetworkParams final_params;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;
};

// Fits the network on the 2D grid.  Supervised mode descends the MSE against
// the analytic eigenfunction by backpropagation; residual mode descends the
// mean squared residual of the trial solution g = h1 + h2 * net with
// central-difference parameter gradients.
TrainingTrace train(const Problem& problem, NetworkParams params,
                    const TrainingConfig& config, const CollocationGrid& grid);

}  // namespace hermnn
