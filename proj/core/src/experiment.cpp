#include "hermnn/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hermnn/errors.hpp"
#include "hermnn/heatmap.hpp"
#include "hermnn/hermite.hpp"
#include "hermnn/io.hpp"

namespace hermnn {

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty()) return name;
  return dir + "/" + name;
}

std::string arch_string(const std::vector<int>& arch) {
  std::string s;
  for (size_t i = 0; i < arch.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(arch[i]);
  }
  return s;
}

struct MethodSetup {
  std::vector<int> arch;
  Activation activation;
};

MethodSetup method_setup(const ExperimentConfig& cfg, Method method) {
  if (method == Method::pinn) {
    return {cfg.pinn_arch, {ActivationKind::sigmoid, cfg.hermite_degree}};
  }
  return {cfg.arch, {ActivationKind::hermite, cfg.hermite_degree}};
}

const char* method_name(Method m) {
  switch (m) {
    case Method::hermite_nn: return "hermite_nn";
    case Method::pinn: return "pinn";
    case Method::collocation: return "collocation";
  }
  return "unknown";
}

// Training nodes: Hermite roots of degree M+1, tensorized, mapped into the
// box for box problems and kept raw for the oscillator unless they would
// leave the domain.
CollocationGrid training_grid(const ExperimentConfig& cfg,
                              const Problem& problem) {
  CollocationGrid grid = build_grid(cfg.basis_size, 2);
  const Domain& d = problem.domain;
  const double extreme =
      std::max(std::abs(grid.nodes_1d.front()), std::abs(grid.nodes_1d.back()));
  if (problem.name == "box" || extreme > d.x_max) {
    grid = map_to_interval(grid, d.x_min, d.x_max);
  }
  return grid;
}

std::string history_csv(const std::vector<double>& history) {
  std::string out = "iteration,loss\n";
  for (size_t i = 0; i < history.size(); ++i) {
    out += std::to_string(i) + "," + format_full(history[i]) + "\n";
  }
  return out;
}

struct EvalGrid {
  std::vector<double> xs, ys;            // axis coordinates, length R
  std::vector<double> actual, predicted;  // row-major, row = y index
};

EvalGrid evaluate_on_grid(const ExperimentConfig& cfg, const Problem& problem,
                          const NetworkParams& params) {
  const int R = cfg.resolution;
  EvalGrid grid;
  grid.xs.resize(R);
  grid.ys.resize(R);
  const Domain& d = problem.domain;
  for (int i = 0; i < R; ++i) {
    grid.xs[i] = d.x_min + i * (d.x_max - d.x_min) / (R - 1);
    grid.ys[i] = d.y_min + i * (d.y_max - d.y_min) / (R - 1);
  }
  grid.actual.resize(size_t(R) * R);
  grid.predicted.resize(size_t(R) * R);
  auto net = [&params](double x, double y) {
    return forward(params, x, y).output;
  };
  const bool wrap = cfg.training.loss_mode == LossMode::residual;
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < R; ++c) {
      const double x = grid.xs[c], y = grid.ys[r];
      grid.actual[size_t(r) * R + c] = problem.analytic_psi(x, y);
      grid.predicted[size_t(r) * R + c] =
          wrap ? trial_solution(net, problem, {x, y}) : net(x, y);
    }
  }
  return grid;
}

std::string wavefunction_csv(const EvalGrid& grid) {
  std::string out = "x,y,actual,predicted\n";
  const int R = static_cast<int>(grid.xs.size());
  for (int r = 0; r < R; ++r) {
    for (int c = 0; c < R; ++c) {
      out += format_full(grid.xs[c]) + "," + format_full(grid.ys[r]) + "," +
             format_full(grid.actual[size_t(r) * R + c]) + "," +
             format_full(grid.predicted[size_t(r) * R + c]) + "\n";
    }
  }
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t k = v.size();
  if (k % 2 == 1) return v[k / 2];
  return 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

}  // namespace

ExperimentResult run_training(const ExperimentConfig& config) {
  if (config.method == Method::collocation) {
    return run_solve(config);
  }
  ExperimentResult result;
  const Problem problem = make_problem(config);
  const MethodSetup setup = method_setup(config, config.method);
  const CollocationGrid grid = training_grid(config, problem);
  NetworkParams params =
      init_params(setup.arch, setup.activation, config.training.seed);

  TrainingTrace trace;
  try {
    trace = train(problem, std::move(params), config.training, grid);
  } catch (const NumericalError& e) {
    const std::string report_path = join_path(config.out_dir, "report.txt");
    std::ostringstream rep;
    rep << "method: " << method_name(config.method) << "\n"
        << "problem: " << problem.name << "\n"
        << "seed: " << config.training.seed << "\n"
        << "status: numerical_failure\n"
        << "error: " << e.what() << "\n";
    write_file_atomic(report_path, rep.str());
    throw;
  }

  MethodRun run;
  run.method = method_name(config.method);
  run.seed = config.training.seed;
  run.loss_history = trace.loss_history;
  run.wall_time_seconds = trace.wall_time_seconds;
  run.arch = setup.arch;

  const EvalGrid eval = evaluate_on_grid(config, problem, trace.final_params);
  run.eval_mse = mse(eval.predicted, eval.actual);

  const std::string history_path = join_path(config.out_dir, "mse_history.csv");
  write_file_atomic(history_path, history_csv(trace.loss_history));
  result.files.push_back(history_path);

  const std::string wf_path = join_path(config.out_dir, "wavefunction.csv");
  write_file_atomic(wf_path, wavefunction_csv(eval));
  result.files.push_back(wf_path);

  const std::string params_path = join_path(config.out_dir, "params.csv");
  write_file_atomic(params_path, params_to_csv(trace.final_params));
  result.files.push_back(params_path);

  if (config.heatmap) {
    const std::string svg_path = join_path(config.out_dir, "heatmap.svg");
    emit_heatmap(eval.predicted, config.resolution, config.resolution,
                 problem.domain, svg_path);
    result.files.push_back(svg_path);
  }

  result.report_path = join_path(config.out_dir, "report.txt");
  std::ostringstream rep;
  rep << "method: " << run.method << "\n"
      << "problem: " << problem.name << "\n"
      << "arch: " << arch_string(setup.arch) << "\n"
      << "activation: "
      << (setup.activation.kind == ActivationKind::hermite ? "hermite"
                                                           : "sigmoid")
      << "\n"
      << "optimizer: "
      << (config.training.optimizer == OptimizerKind::adam ? "adam" : "sgd")
      << "\n"
      << "learning_rate: " << format_full(config.training.learning_rate) << "\n"
      << "loss_mode: "
      << (config.training.loss_mode == LossMode::supervised ? "supervised"
                                                            : "residual")
      << "\n"
      << "seed: " << run.seed << "\n"
      << "iterations_requested: " << config.training.iterations << "\n"
      << "iterations_run: " << run.loss_history.size() << "\n"
      << "final_loss: "
      << (run.loss_history.empty() ? std::string("none")
                                   : format_full(run.loss_history.back()))
      << "\n"
      << "eval_mse: " << format_full(run.eval_mse) << "\n"
      << "wall_time_seconds: " << trace.wall_time_seconds << "\n"
      << "files:\n";
  for (const std::string& f : result.files) rep << "  " << f << "\n";
  write_file_atomic(result.report_path, rep.str());

  result.runs.push_back(std::move(run));
  return result;
}

ExperimentResult run_comparison(const ExperimentConfig& config) {
  ExperimentResult result;
  const Problem problem = make_problem(config);
  const CollocationGrid grid = training_grid(config, problem);

  std::ostringstream rep;
  rep << "compare: hermite_nn vs pinn\n"
      << "problem: " << problem.name << "\n"
      << "optimizer: "
      << (config.training.optimizer == OptimizerKind::adam ? "adam" : "sgd")
      << "\n"
      << "learning_rate: " << format_full(config.training.learning_rate) << "\n"
      << "iterations: " << config.training.iterations << "\n"
      << "seeds: " << config.compare_seeds << " starting at "
      << config.training.seed << "\n";

  for (Method method : {Method::hermite_nn, Method::pinn}) {
    const MethodSetup setup = method_setup(config, method);
    std::vector<double> finals;
    for (int s = 0; s < config.compare_seeds; ++s) {
      const std::uint64_t seed = config.training.seed + s;
      TrainingConfig tc = config.training;
      tc.seed = seed;
      NetworkParams params = init_params(setup.arch, setup.activation, seed);
      TrainingTrace trace = train(problem, std::move(params), tc, grid);

      const std::string path = join_path(
          config.out_dir, std::string("mse_history_") + method_name(method) +
                              "_seed" + std::to_string(seed) + ".csv");
      write_file_atomic(path, history_csv(trace.loss_history));
      result.files.push_back(path);

      MethodRun run;
      run.method = method_name(method);
      run.seed = seed;
      run.loss_history = trace.loss_history;
      run.wall_time_seconds = trace.wall_time_seconds;
      run.arch = setup.arch;
      const double final_loss =
          trace.loss_history.empty() ? std::nan("") : trace.loss_history.back();
      finals.push_back(final_loss);
      rep << "run: " << run.method << " seed " << seed
          << " final_loss " << format_full(final_loss) << "\n";
      result.runs.push_back(std::move(run));
    }
    result.median_final_loss[method_name(method)] = median(finals);
  }

  const double med_h = result.median_final_loss["hermite_nn"];
  const double med_p = result.median_final_loss["pinn"];
  rep << "median_final_loss hermite_nn: " << format_full(med_h) << "\n"
      << "median_final_loss pinn: " << format_full(med_p) << "\n"
      << "hermite_median_le_pinn_median: "
      << ((med_h <= med_p) ? "true" : "false") << "\n"
      << "files:\n";
  for (const std::string& f : result.files) rep << "  " << f << "\n";

  result.report_path = join_path(config.out_dir, "report.txt");
  write_file_atomic(result.report_path, rep.str());
  return result;
}

ExperimentResult run_solve(const ExperimentConfig& config) {
  if (config.plant_degree > config.expansion_degree) {
    throw ConfigError("run_solve: plant_degree exceeds expansion_degree");
  }
  ExperimentResult result;
  const int N = config.expansion_degree;
  const int k = config.plant_degree;
  const bool laplacian = config.collocation_operator == "laplacian";

  CollocationGrid grid = build_grid(config.basis_size, 1);
  if (laplacian) {
    // Dirichlet rows pin the two-dimensional null space of u''.
    const double edge = grid.nodes_1d.back() + 1.0;
    for (double zb : {-edge, edge}) {
      grid.boundary.push_back({{zb, 0.0}, eval_basis(k, zb)[k]});
    }
  }

  const LinearOperator op = laplacian ? LinearOperator::second_derivative()
                                      : LinearOperator::identity();
  auto source = [k, laplacian](double z) {
    return laplacian ? eval_second_derivative_basis(k, z)[k]
                     : eval_basis(k, z)[k];
  };
  const LinearSystem system = assemble_system(op, grid, N, source);
  const WeightSolution sol = solve_weights(system);

  std::string weights = "n,weight\n";
  double max_coeff_err = 0.0;
  for (int n = 0; n <= N; ++n) {
    weights += std::to_string(n) + "," + format_full(sol.weights(n)) + "\n";
    const double expected = (n == k) ? 1.0 : 0.0;
    max_coeff_err = std::max(max_coeff_err, std::abs(sol.weights(n) - expected));
  }
  const std::string weights_path = join_path(config.out_dir, "weights.csv");
  write_file_atomic(weights_path, weights);
  result.files.push_back(weights_path);

  std::string gridcsv = "x,exact,recovered\n";
  const double lo = grid.nodes_1d.front(), hi = grid.nodes_1d.back();
  for (int i = 0; i < config.resolution; ++i) {
    const double x = lo + i * (hi - lo) / (config.resolution - 1);
    gridcsv += format_full(x) + "," + format_full(eval_basis(k, x)[k]) + "," +
               format_full(evaluate_expansion(sol.weights, x)) + "\n";
  }
  const std::string grid_path = join_path(config.out_dir, "expansion_grid.csv");
  write_file_atomic(grid_path, gridcsv);
  result.files.push_back(grid_path);

  std::ostringstream rep;
  rep << "method: collocation\n"
      << "operator: " << config.collocation_operator << "\n"
      << "expansion_degree: " << N << "\n"
      << "basis_size: " << config.basis_size << "\n"
      << "plant_degree: " << k << "\n"
      << "condition: " << format_full(sol.condition) << "\n"
      << "residual_norm: " << format_full(sol.residual_norm) << "\n"
      << "max_coefficient_error: " << format_full(max_coeff_err) << "\n"
      << "files:\n";
  for (const std::string& f : result.files) rep << "  " << f << "\n";
  result.report_path = join_path(config.out_dir, "report.txt");
  write_file_atomic(result.report_path, rep.str());
  return result;
}

ExperimentResult run_basis_dump(const ExperimentConfig& config) {
  ExperimentResult result;
  const int degree = config.basis_size + 1;
  const std::vector<double> roots = hermite_roots(degree);
  const std::vector<double> weights = quad_weights(degree, roots);

  std::string nodes = "index,node,weight\n";
  for (int i = 0; i < degree; ++i) {
    nodes += std::to_string(i) + "," + format_full(roots[i]) + "," +
             format_full(weights[i]) + "\n";
  }
  const std::string nodes_path = join_path(config.out_dir, "nodes.csv");
  write_file_atomic(nodes_path, nodes);
  result.files.push_back(nodes_path);

  const int N = config.expansion_degree;
  std::string values = "x";
  for (int n = 0; n <= N; ++n) values += ",h" + std::to_string(n);
  values += "\n";
  const double span = std::abs(roots.back()) + 1.0;
  for (int i = 0; i < config.resolution; ++i) {
    const double x = -span + i * (2.0 * span) / (config.resolution - 1);
    values += format_full(x);
    const std::vector<double> h = eval_basis(N, x);
    for (int n = 0; n <= N; ++n) values += "," + format_full(h[n]);
    values += "\n";
  }
  const std::string values_path = join_path(config.out_dir, "basis_values.csv");
  write_file_atomic(values_path, values);
  result.files.push_back(values_path);

  std::ostringstream rep;
  rep << "basis dump\n"
      << "node_degree: " << degree << "\n"
      << "value_degrees: 0.." << N << "\n"
      << "files:\n";
  for (const std::string& f : result.files) rep << "  " << f << "\n";
  result.report_path = join_path(config.out_dir, "report.txt");
  write_file_atomic(result.report_path, rep.str());
  return result;
}

}  // namespace hermnn
