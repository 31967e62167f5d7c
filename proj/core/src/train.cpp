#include "hermnn/train.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hermnn/errors.hpp"

namespace hermnn {

double mse(std::span<const double> predicted, std::span<const double> actual) {
  if (predicted.size() != actual.size()) {
    throw ConfigError("mse: size mismatch " + std::to_string(predicted.size()) +
                      " vs " + std::to_string(actual.size()));
  }
  if (predicted.empty()) {
    throw ConfigError("mse: empty input");
  }
  double acc = 0.0;
  for (size_t i = 0; i < predicted.size(); ++i) {
    const double d = actual[i] - predicted[i];
    acc += d * d;
  }
  return acc / predicted.size();
}

double residual_loss(const std::function<double(double, double)>& model,
                     const Problem& problem, std::span<const Point2> points) {
  if (!model) throw ConfigError("residual_loss: empty model");
  if (points.empty()) throw ConfigError("residual_loss: no points");
  ScalarField field{model, nullptr};
  double acc = 0.0;
  for (const Point2& p : points) {
    const double r =
        schrodinger_residual(problem, field, p, LaplacianMode::finite_difference);
    acc += r * r;
  }
  return acc / points.size();
}

Eigen::VectorXd sgd_step(const Eigen::VectorXd& w, const Eigen::VectorXd& grad,
                         double learning_rate) {
  if (w.size() != grad.size()) {
    throw ConfigError("sgd_step: size mismatch");
  }
  return w - learning_rate * grad;
}

AdamState make_adam_state(int size) {
  if (size < 1) throw ConfigError("make_adam_state: size must be >= 1");
  AdamState state;
  state.m = Eigen::VectorXd::Zero(size);
  state.v = Eigen::VectorXd::Zero(size);
  state.step = 0;
  return state;
}

Eigen::VectorXd adam_step(AdamState& state, const Eigen::VectorXd& w,
                          const Eigen::VectorXd& grad, double learning_rate,
                          double beta1, double beta2, double epsilon) {
  if (w.size() != grad.size() || w.size() != state.m.size() ||
      w.size() != state.v.size()) {
    throw ConfigError("adam_step: size mismatch");
  }
  state.m = beta1 * state.m + (1.0 - beta1) * grad;
  state.v = beta2 * state.v + (1.0 - beta2) * grad.cwiseProduct(grad);
  state.step += 1;
  const double c1 = 1.0 - std::pow(beta1, double(state.step));
  const double c2 = 1.0 - std::pow(beta2, double(state.step));
  Eigen::ArrayXd mhat = state.m.array() / c1;
  Eigen::ArrayXd vhat = state.v.array() / c2;
  return w.array() - learning_rate * mhat / (vhat.sqrt() + epsilon);
}

std::vector<int> batch_indices(std::uint64_t seed, int iteration,
                               int batch_size, int point_count) {
  if (point_count < 1) throw ConfigError("batch_indices: no points");
  if (batch_size < 1 || batch_size > point_count) {
    throw ConfigError("batch_indices: batch_size " +
                      std::to_string(batch_size) + " outside [1, " +
                      std::to_string(point_count) + "]");
  }
  if (iteration < 0) throw ConfigError("batch_indices: negative iteration");
  std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ULL * (iteration + 1)));
  std::uniform_int_distribution<int> pick(0, point_count - 1);
  std::vector<int> idx(batch_size);
  for (int& i : idx) i = pick(gen);
  return idx;
}

namespace {

struct LossAndGrad {
  double loss = 0.0;
  Eigen::VectorXd grad;
};

LossAndGrad supervised_pass(const NetworkParams& params,
                            const std::vector<Point2>& points,
                            const std::vector<double>& targets,
                            const std::vector<int>& idx) {
  Gradients total = zero_gradients(params);
  double loss = 0.0;
  for (int i : idx) {
    ForwardTrace trace = forward(params, points[i].x, points[i].y);
    const double d = targets[i] - trace.output;
    loss += d * d;
    accumulate(total, backward(params, trace, targets[i]));
  }
  const double inv = 1.0 / idx.size();
  scale(total, inv);
  return {loss * inv, flatten(params, total)};
}

double residual_pass_loss(NetworkParams& params, const Problem& problem,
                          const std::vector<Point2>& points,
                          const std::vector<int>& idx) {
  std::vector<Point2> batch;
  batch.reserve(idx.size());
  for (int i : idx) batch.push_back(points[i]);
  auto net = [&params](double x, double y) {
    return forward(params, x, y).output;
  };
  auto g = [&](double x, double y) {
    return trial_solution(net, problem, {x, y});
  };
  return residual_loss(g, problem, batch);
}

LossAndGrad residual_pass(NetworkParams& params, const Problem& problem,
                          const std::vector<Point2>& points,
                          const std::vector<int>& idx) {
  LossAndGrad out;
  out.loss = residual_pass_loss(params, problem, points, idx);
  Eigen::VectorXd w = flatten(params);
  out.grad.resize(w.size());
  for (int k = 0; k < w.size(); ++k) {
    const double saved = w(k);
    const double h = 1e-6 * std::max(1.0, std::abs(saved));
    w(k) = saved + h;
    unflatten(w, params);
    const double above = residual_pass_loss(params, problem, points, idx);
    w(k) = saved - h;
    unflatten(w, params);
    const double below = residual_pass_loss(params, problem, points, idx);
    w(k) = saved;
    out.grad(k) = (above - below) / (2.0 * h);
  }
  unflatten(w, params);
  return out;
}

}  // namespace

TrainingTrace train(const Problem& problem, NetworkParams params,
                    const TrainingConfig& config, const CollocationGrid& grid) {
  const auto start = std::chrono::steady_clock::now();
  if (grid.dim != 2 || grid.nodes_2d.empty()) {
    throw ConfigError("train: need a 2D grid");
  }
  if (config.iterations < 0) {
    throw ConfigError("train: negative iteration count");
  }
  if (!(config.learning_rate > 0.0)) {
    throw ConfigError("train: learning rate must be > 0");
  }

  std::vector<Point2> points;
  if (config.loss_mode == LossMode::supervised) {
    points = grid.nodes_2d;
    for (const Point2& p : points) {
      if (!problem.domain.contains(p.x, p.y)) {
        throw ConfigError("train: grid point (" + std::to_string(p.x) + ", " +
                          std::to_string(p.y) + ") outside problem domain");
      }
    }
  } else {
    // The residual stencil reaches 2h past each point.
    const double margin = 2.0 * kFdLaplacianStep;
    const Domain& d = problem.domain;
    for (const Point2& p : grid.nodes_2d) {
      if (p.x - margin >= d.x_min && p.x + margin <= d.x_max &&
          p.y - margin >= d.y_min && p.y + margin <= d.y_max) {
        points.push_back(p);
      }
    }
    if (points.empty()) {
      throw ConfigError("train: no grid points admit the residual stencil");
    }
  }

  std::vector<double> targets(points.size(), 0.0);
  if (config.loss_mode == LossMode::supervised) {
    for (size_t i = 0; i < points.size(); ++i) {
      targets[i] = problem.analytic_psi(points[i].x, points[i].y);
    }
  }

  const int n = static_cast<int>(points.size());
  if (config.batch == BatchMode::stochastic && config.batch_size > n) {
    throw ConfigError("train: batch_size " + std::to_string(config.batch_size) +
                      " exceeds training-set size " + std::to_string(n));
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  Eigen::VectorXd w = flatten(params);
  AdamState adam;
  if (config.optimizer == OptimizerKind::adam) {
    adam = make_adam_state(static_cast<int>(w.size()));
  }

  TrainingTrace trace;
  trace.seed = config.seed;
  trace.loss_history.reserve(config.iterations);

  std::vector<int> batch;
  for (int it = 0; it < config.iterations; ++it) {
    try {
      const std::vector<int>* idx = &all;
      if (config.batch == BatchMode::stochastic) {
        batch = batch_indices(config.seed, it, config.batch_size, n);
        idx = &batch;
      }

      LossAndGrad lg = (config.loss_mode == LossMode::supervised)
                           ? supervised_pass(params, points, targets, *idx)
                           : residual_pass(params, problem, points, *idx);
      if (!std::isfinite(lg.loss) || !lg.grad.allFinite()) {
        throw NumericalError("non-finite loss or gradient");
      }
      trace.loss_history.push_back(lg.loss);

      Eigen::VectorXd next =
          (config.optimizer == OptimizerKind::sgd)
              ? sgd_step(w, lg.grad, config.learning_rate)
              : adam_step(adam, w, lg.grad, config.learning_rate, config.beta1,
                          config.beta2, config.epsilon);
      const double update_norm = (next - w).norm();
      w = next;
      unflatten(w, params);
      if (config.stop_tol > 0.0 && update_norm < config.stop_tol) break;
    } catch (const NumericalError& e) {
      throw NumericalError("train: iteration " + std::to_string(it) + ": " +
                           e.what());
    }
  }

  trace.final_params = std::move(params);
  trace.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return trace;
}

}  // namespace hermnn
