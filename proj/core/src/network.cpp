#include "hermnn/network.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "hermnn/errors.hpp"
#include "hermnn/hermite.hpp"

namespace hermnn {

int neuron_degree(const Activation& act, int neuron_index) {
  if (act.max_degree < 0 || act.max_degree > kMaxHermiteDegree) {
    throw ConfigError("neuron_degree: max_degree out of range");
  }
  if (neuron_index < 0) {
    throw ConfigError("neuron_degree: negative neuron index");
  }
  return (neuron_index + 1) % (act.max_degree + 1);
}

ActivationValue activation_eval(const Activation& act, int degree, double z) {
  if (act.kind == ActivationKind::sigmoid) {
    const double a = 1.0 / (1.0 + std::exp(-z));
    return {a, a * (1.0 - a)};
  }
  std::vector<double> h = eval_basis(degree, z);
  std::vector<double> d = eval_derivative_basis(degree, z);
  return {h[degree], d[degree]};
}

namespace {

void check_arch(const std::vector<int>& arch) {
  if (arch.size() < 2) {
    throw ConfigError("init_params: architecture needs at least 2 layers");
  }
  if (arch.front() != 2) {
    throw ConfigError("init_params: input width must be 2, got " +
                      std::to_string(arch.front()));
  }
  if (arch.back() != 1) {
    throw ConfigError("init_params: output width must be 1, got " +
                      std::to_string(arch.back()));
  }
  for (int w : arch) {
    if (w < 1) throw ConfigError("init_params: non-positive layer width");
  }
}

void check_shapes(const NetworkParams& params, const char* fn) {
  const int layers = params.layer_count();
  if (layers == 0 || static_cast<int>(params.biases.size()) != layers) {
    throw ConfigError(std::string(fn) + ": inconsistent layer counts");
  }
  if (params.weights[0].cols() != 2) {
    throw ConfigError(std::string(fn) + ": first layer must take 2 inputs");
  }
  if (params.weights[layers - 1].rows() != 1) {
    throw ConfigError(std::string(fn) + ": output layer must have 1 row");
  }
  for (int l = 0; l < layers; ++l) {
    if (params.biases[l].size() != params.weights[l].rows()) {
      throw ConfigError(std::string(fn) + ": bias/weight mismatch at layer " +
                        std::to_string(l));
    }
    if (l > 0 && params.weights[l].cols() != params.weights[l - 1].rows()) {
      throw ConfigError(std::string(fn) + ": width mismatch at layer " +
                        std::to_string(l));
    }
  }
}

}  // namespace

NetworkParams init_params(const std::vector<int>& arch, const Activation& act,
                          std::uint64_t seed) {
  check_arch(arch);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 0.1);

  NetworkParams params;
  params.activation = act;
  params.seed = seed;
  const int layers = static_cast<int>(arch.size()) - 1;
  params.weights.resize(layers);
  params.biases.resize(layers);
  for (int l = 0; l < layers; ++l) {
    params.weights[l].resize(arch[l + 1], arch[l]);
    for (int r = 0; r < params.weights[l].rows(); ++r) {
      for (int c = 0; c < params.weights[l].cols(); ++c) {
        params.weights[l](r, c) = dist(gen);
      }
    }
    params.biases[l] = Eigen::VectorXd::Zero(arch[l + 1]);
  }
  return params;
}

std::vector<int> architecture_of(const NetworkParams& params) {
  check_shapes(params, "architecture_of");
  std::vector<int> arch;
  arch.push_back(static_cast<int>(params.weights[0].cols()));
  for (const auto& w : params.weights) {
    arch.push_back(static_cast<int>(w.rows()));
  }
  return arch;
}

ForwardTrace forward(const NetworkParams& params, double x, double y) {
  check_shapes(params, "forward");
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw ConfigError("forward: non-finite input");
  }
  const int layers = params.layer_count();
  ForwardTrace trace;
  trace.input << x, y;
  trace.pre_activations.resize(layers);
  trace.activations.resize(layers - 1);

  Eigen::VectorXd a = trace.input;
  for (int l = 0; l < layers; ++l) {
    Eigen::VectorXd z = params.weights[l] * a + params.biases[l];
    if (!z.allFinite()) {
      throw NumericalError("forward: non-finite pre-activation at layer " +
                           std::to_string(l));
    }
    trace.pre_activations[l] = z;
    if (l + 1 < layers) {
      Eigen::VectorXd act(z.size());
      for (int j = 0; j < z.size(); ++j) {
        act(j) =
            activation_eval(params.activation,
                            neuron_degree(params.activation, j), z(j)).value;
      }
      trace.activations[l] = act;
      a = act;
    } else {
      trace.output = z(0);
    }
  }
  if (!std::isfinite(trace.output)) {
    throw NumericalError("forward: non-finite output");
  }
  return trace;
}

Gradients backward(const NetworkParams& params, const ForwardTrace& trace,
                   double target) {
  check_shapes(params, "backward");
  const int layers = params.layer_count();
  if (static_cast<int>(trace.pre_activations.size()) != layers ||
      static_cast<int>(trace.activations.size()) != layers - 1) {
    throw ConfigError("backward: trace does not match network depth");
  }
  for (int l = 0; l < layers; ++l) {
    if (trace.pre_activations[l].size() != params.weights[l].rows()) {
      throw ConfigError("backward: trace width mismatch at layer " +
                        std::to_string(l));
    }
  }

  Gradients grads = zero_gradients(params);
  const Eigen::VectorXd input_vec = trace.input;
  // d/d(output) of (target - output)^2
  Eigen::VectorXd delta(1);
  delta(0) = -2.0 * (target - trace.output);
  for (int l = layers - 1; l >= 0; --l) {
    const Eigen::VectorXd& below = (l == 0) ? input_vec : trace.activations[l - 1];
    grads.weights[l] = delta * below.transpose();
    grads.biases[l] = delta;
    if (l == 0) break;
    Eigen::VectorXd up = params.weights[l].transpose() * delta;
    const Eigen::VectorXd& z = trace.pre_activations[l - 1];
    delta.resize(z.size());
    for (int j = 0; j < z.size(); ++j) {
      delta(j) = up(j) *
                 activation_eval(params.activation,
                                 neuron_degree(params.activation, j), z(j))
                     .derivative;
    }
  }
  return grads;
}

Gradients zero_gradients(const NetworkParams& params) {
  Gradients g;
  g.weights.reserve(params.weights.size());
  g.biases.reserve(params.biases.size());
  for (const auto& w : params.weights) {
    g.weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
  }
  for (const auto& b : params.biases) {
    g.biases.push_back(Eigen::VectorXd::Zero(b.size()));
  }
  return g;
}

void accumulate(Gradients& into, const Gradients& g) {
  if (into.weights.size() != g.weights.size()) {
    throw ConfigError("accumulate: gradient layer mismatch");
  }
  for (size_t l = 0; l < g.weights.size(); ++l) {
    into.weights[l] += g.weights[l];
    into.biases[l] += g.biases[l];
  }
}

void scale(Gradients& g, double factor) {
  for (auto& w : g.weights) w *= factor;
  for (auto& b : g.biases) b *= factor;
}

namespace {

int flat_size(const NetworkParams& params) {
  int n = 0;
  for (const auto& w : params.weights) n += static_cast<int>(w.size());
  for (const auto& b : params.biases) n += static_cast<int>(b.size());
  return n;
}

}  // namespace

Eigen::VectorXd flatten(const NetworkParams& params) {
  Eigen::VectorXd flat(flat_size(params));
  int k = 0;
  for (size_t l = 0; l < params.weights.size(); ++l) {
    const auto& w = params.weights[l];
    for (int r = 0; r < w.rows(); ++r) {
      for (int c = 0; c < w.cols(); ++c) flat(k++) = w(r, c);
    }
    for (int r = 0; r < params.biases[l].size(); ++r) {
      flat(k++) = params.biases[l](r);
    }
  }
  return flat;
}

Eigen::VectorXd flatten(const NetworkParams& params, const Gradients& grads) {
  if (grads.weights.size() != params.weights.size()) {
    throw ConfigError("flatten: gradient layer mismatch");
  }
  Eigen::VectorXd flat(flat_size(params));
  int k = 0;
  for (size_t l = 0; l < grads.weights.size(); ++l) {
    const auto& w = grads.weights[l];
    for (int r = 0; r < w.rows(); ++r) {
      for (int c = 0; c < w.cols(); ++c) flat(k++) = w(r, c);
    }
    for (int r = 0; r < grads.biases[l].size(); ++r) {
      flat(k++) = grads.biases[l](r);
    }
  }
  return flat;
}

void unflatten(const Eigen::VectorXd& flat, NetworkParams& params) {
  check_shapes(params, "unflatten");
  if (flat.size() != flat_size(params)) {
    throw ConfigError("unflatten: flat vector size " +
                      std::to_string(flat.size()) + " does not match network");
  }
  int k = 0;
  for (size_t l = 0; l < params.weights.size(); ++l) {
    auto& w = params.weights[l];
    for (int r = 0; r < w.rows(); ++r) {
      for (int c = 0; c < w.cols(); ++c) w(r, c) = flat(k++);
    }
    for (int r = 0; r < params.biases[l].size(); ++r) {
      params.biases[l](r) = flat(k++);
    }
  }
}

std::string params_to_csv(const NetworkParams& params) {
  check_shapes(params, "params_to_csv");
  std::string out = "layer,row,col,value\n";
  char buf[64];
  for (size_t l = 0; l < params.weights.size(); ++l) {
    const auto& w = params.weights[l];
    for (int r = 0; r < w.rows(); ++r) {
      for (int c = 0; c < w.cols(); ++c) {
        std::snprintf(buf, sizeof buf, "%zu,%d,%d,%.17g\n", l, r, c, w(r, c));
        out += buf;
      }
    }
    for (int r = 0; r < params.biases[l].size(); ++r) {
      std::snprintf(buf, sizeof buf, "%zu,%d,-1,%.17g\n", l, r,
                    params.biases[l](r));
      out += buf;
    }
  }
  return out;
}

}  // namespace hermnn
