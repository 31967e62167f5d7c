#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hermnn {

enum class ActivationKind { hermite, sigmoid };

struct Activation {
  ActivationKind kind = ActivationKind::hermite;
  // Hermite neurons cycle through degrees 1, 2, ..., max_degree, 0, 1, ...
  // down each hidden layer; sigmoid ignores this.
  int max_degree = 5;
};

int neuron_degree(const Activation& act, int neuron_index);

struct ActivationValue {
  double value = 0.0;
  double derivative = 0.0;
};

ActivationValue activation_eval(const Activation& act, int degree, double z);

// Fully connected net, input (x, y), scalar linear output.  weights[l] is
// (out x in) for layer l, acting on the previous activation.
struct NetworkParams {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  Activation activation;
  std::uint64_t seed = 0;

  int layer_count() const { return static_cast<int>(weights.size()); }
};

// arch = {2, h1, ..., hk, 1}.  Weights ~ N(0, 0.1^2) from a seeded
// mt19937_64, biases zero.
NetworkParams init_params(const std::vector<int>& arch, const Activation& act,
                          std::uint64_t seed);

std::vector<int> architecture_of(const NetworkParams& params);

struct ForwardTrace {
  Eigen::Vector2d input;
  std::vector<Eigen::VectorXd> pre_activations;  // z_1 .. z_L
  std::vector<Eigen::VectorXd> activations;      // a_1 .. a_{L-1}
  double output = 0.0;
};

ForwardTrace forward(const NetworkParams& params, double x, double y);

struct Gradients {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
};

// Gradient of (target - output)^2 by backpropagation through the trace.
Gradients backward(const NetworkParams& params, const ForwardTrace& trace,
                   double target);

Gradients zero_gradients(const NetworkParams& params);
void accumulate(Gradients& into, const Gradients& g);
void scale(Gradients& g, double factor);

// Flat parameter vector, layer order, weights row-major then bias per layer.
Eigen::VectorXd flatten(const NetworkParams& params);
Eigen::VectorXd flatten(const NetworkParams& params, const Gradients& grads);
void unflatten(const Eigen::VectorXd& flat, NetworkParams& params);

// CSV rows layer,row,col,value with col = -1 for bias entries.
std::string params_to_csv(const NetworkParams& params);

}  // namespace hermnn
