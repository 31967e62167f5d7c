#include "hermnn/network.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "hermnn/errors.hpp"
#include "hermnn/hermite.hpp"

namespace {

using hermnn::Activation;
using hermnn::ActivationKind;
using hermnn::activation_eval;
using hermnn::backward;
using hermnn::flatten;
using hermnn::ForwardTrace;
using hermnn::forward;
using hermnn::Gradients;
using hermnn::init_params;
using hermnn::NetworkParams;
using hermnn::neuron_degree;
using hermnn::params_to_csv;
using hermnn::unflatten;

const Activation kHermite{ActivationKind::hermite, 5};
const Activation kSigmoid{ActivationKind::sigmoid, 5};

TEST(NeuronDegree, CyclesFromOne) {
  // width 15, D = 5: 1,2,3,4,5,0,1,...
  const int expected[15] = {1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 0, 1, 2, 3};
  for (int j = 0; j < 15; ++j) {
    EXPECT_EQ(neuron_degree(kHermite, j), expected[j]) << "j=" << j;
  }
}

TEST(NeuronDegree, DegreeCapZeroMakesAllGaussian) {
  const Activation act{ActivationKind::hermite, 0};
  for (int j = 0; j < 6; ++j) EXPECT_EQ(neuron_degree(act, j), 0);
}

TEST(NeuronDegree, SingleNeuronLayerGetsDegreeOne) {
  EXPECT_EQ(neuron_degree(kHermite, 0), 1);
}

TEST(ActivationEval, SigmoidValueAndDerivative) {
  const auto at0 = activation_eval(kSigmoid, 0, 0.0);
  EXPECT_DOUBLE_EQ(at0.value, 0.5);
  EXPECT_DOUBLE_EQ(at0.derivative, 0.25);
  const auto at2 = activation_eval(kSigmoid, 3, 2.0);
  const double s = 1.0 / (1.0 + std::exp(-2.0));
  EXPECT_NEAR(at2.value, s, 1e-15);
  EXPECT_NEAR(at2.derivative, s * (1.0 - s), 1e-15);
}

TEST(ActivationEval, HermiteUsesTrueDerivative) {
  for (int d = 0; d <= 5; ++d) {
    for (double z : {-2.0, -0.5, 0.0, 0.4, 1.7}) {
      const auto a = activation_eval(kHermite, d, z);
      EXPECT_DOUBLE_EQ(a.value, hermnn::eval_basis(d, z)[d]);
      EXPECT_DOUBLE_EQ(a.derivative, hermnn::eval_derivative_basis(d, z)[d]);
    }
  }
}

TEST(InitParams, ShapesSeedAndZeroBiases) {
  const NetworkParams p = init_params({2, 5, 1}, kHermite, 42);
  ASSERT_EQ(p.layer_count(), 2);
  EXPECT_EQ(p.weights[0].rows(), 5);
  EXPECT_EQ(p.weights[0].cols(), 2);
  EXPECT_EQ(p.weights[1].rows(), 1);
  EXPECT_EQ(p.weights[1].cols(), 5);
  EXPECT_TRUE(p.biases[0].isZero(0.0));
  EXPECT_TRUE(p.biases[1].isZero(0.0));
  EXPECT_EQ(p.seed, 42u);

  const NetworkParams q = init_params({2, 5, 1}, kHermite, 42);
  EXPECT_EQ(flatten(p), flatten(q));
  const NetworkParams r = init_params({2, 5, 1}, kHermite, 43);
  EXPECT_NE(flatten(p), flatten(r));
}

TEST(InitParams, WeightsLookGaussianWithStd01) {
  const NetworkParams p = init_params({2, 50, 50, 1}, kHermite, 7);
  double acc = 0.0, acc2 = 0.0;
  int count = 0;
  for (const auto& w : p.weights) {
    for (int r = 0; r < w.rows(); ++r) {
      for (int c = 0; c < w.cols(); ++c) {
        acc += w(r, c);
        acc2 += w(r, c) * w(r, c);
        ++count;
      }
    }
  }
  const double mean = acc / count;
  const double stdev = std::sqrt(acc2 / count - mean * mean);
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(stdev, 0.1, 0.01);
}

TEST(InitParams, RejectsBadArchitectures) {
  EXPECT_THROW(init_params({2}, kHermite, 0), hermnn::ConfigError);
  EXPECT_THROW(init_params({3, 5, 1}, kHermite, 0), hermnn::ConfigError);
  EXPECT_THROW(init_params({2, 5, 2}, kHermite, 0), hermnn::ConfigError);
  EXPECT_THROW(init_params({2, 0, 1}, kHermite, 0), hermnn::ConfigError);
}

TEST(Forward, ZeroNetWithDegreeOneNeuronsIsZero) {
  NetworkParams p = init_params({2, 1, 1, 1}, kHermite, 0);
  for (auto& w : p.weights) w.setZero();
  const ForwardTrace trace = forward(p, 0.7, -0.3);
  EXPECT_DOUBLE_EQ(trace.output, 0.0);
}

TEST(Forward, SigmoidHandTrace) {
  NetworkParams p = init_params({2, 1, 1}, kSigmoid, 0);
  p.weights[0] << 1.0, 0.0;
  p.weights[1] << 2.0;
  p.biases[0].setZero();
  p.biases[1].setZero();
  const ForwardTrace trace = forward(p, 0.0, 5.0);
  EXPECT_DOUBLE_EQ(trace.pre_activations[0](0), 0.0);
  EXPECT_DOUBLE_EQ(trace.activations[0](0), 0.5);
  EXPECT_DOUBLE_EQ(trace.output, 1.0);
}

TEST(Forward, OutputLayerIsAffine) {
  NetworkParams p = init_params({2, 1, 1}, kHermite, 3);
  p.weights[0].setZero();
  p.activation.max_degree = 0;  // hidden neuron is H0~, value 1 at z = 0
  p.biases[1](0) = 3.0;
  p.weights[1].setZero();
  EXPECT_DOUBLE_EQ(forward(p, 0.2, 0.8).output, 3.0);
}

TEST(Forward, LastLayerScalesLinearly) {
  NetworkParams p = init_params({2, 7, 7, 1}, kHermite, 19);
  const double base = forward(p, 0.3, -0.9).output;
  p.weights.back() *= 2.0;
  p.biases.back() *= 2.0;
  EXPECT_NEAR(forward(p, 0.3, -0.9).output, 2.0 * base, 1e-12);
}

TEST(Forward, HermiteHiddenActivationsBounded) {
  // Cramer's bound keeps |Hn~| below 1.086 everywhere.
  const NetworkParams p = init_params({2, 15, 15, 1}, kHermite, 5);
  for (double x : {-5.0, -1.0, 0.0, 2.0, 5.0}) {
    const ForwardTrace trace = forward(p, x, -x);
    for (const auto& layer : trace.activations) {
      for (int j = 0; j < layer.size(); ++j) {
        EXPECT_LE(std::abs(layer(j)), 1.1);
      }
    }
  }
}

TEST(Forward, DeterministicTraces) {
  const NetworkParams p = init_params({2, 9, 1}, kHermite, 11);
  const ForwardTrace a = forward(p, 0.25, 0.75);
  const ForwardTrace b = forward(p, 0.25, 0.75);
  EXPECT_EQ(a.output, b.output);
  for (size_t l = 0; l < a.pre_activations.size(); ++l) {
    EXPECT_EQ(a.pre_activations[l], b.pre_activations[l]);
  }
}

TEST(Forward, RejectsNonFinite) {
  NetworkParams p = init_params({2, 3, 1}, kSigmoid, 1);
  EXPECT_THROW(forward(p, std::nan(""), 0.0), hermnn::ConfigError);
  p.weights[0](0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(forward(p, 1.0, 1.0), hermnn::NumericalError);
}

TEST(Backward, ZeroGradientAtExactFit) {
  const NetworkParams p = init_params({2, 6, 1}, kHermite, 23);
  const ForwardTrace trace = forward(p, 0.4, 0.6);
  const Gradients g = backward(p, trace, trace.output);
  for (const auto& w : g.weights) EXPECT_TRUE(w.isZero(0.0));
  for (const auto& b : g.biases) EXPECT_TRUE(b.isZero(0.0));
}

TEST(Backward, SigmoidHandTrace) {
  NetworkParams p = init_params({2, 1, 1}, kSigmoid, 0);
  p.weights[0] << 1.0, 0.0;
  p.weights[1] << 2.0;
  p.biases[0].setZero();
  p.biases[1].setZero();
  const ForwardTrace trace = forward(p, 0.0, 5.0);  // output = 1.0
  const Gradients g = backward(p, trace, 0.0);
  // delta_out = -2 (0 - 1) = 2
  EXPECT_DOUBLE_EQ(g.biases[1](0), 2.0);
  // dW2 = delta_out * a1 = 2 * 0.5
  EXPECT_DOUBLE_EQ(g.weights[1](0, 0), 1.0);
  // delta_1 = W2^T delta_out * sigma'(0) = 2 * 2 * 0.25 = 1
  EXPECT_DOUBLE_EQ(g.biases[0](0), 1.0);
  EXPECT_DOUBLE_EQ(g.weights[0](0, 0), 0.0);  // input x = 0
  EXPECT_DOUBLE_EQ(g.weights[0](0, 1), 5.0);  // input y = 5
}

TEST(Backward, RejectsForeignTrace) {
  const NetworkParams p = init_params({2, 4, 1}, kHermite, 2);
  const NetworkParams other = init_params({2, 4, 4, 1}, kHermite, 2);
  const ForwardTrace trace = forward(other, 0.1, 0.2);
  EXPECT_THROW(backward(p, trace, 0.0), hermnn::ConfigError);
}

// Central-difference check of every parameter of (target - out)^2 on 20
// seeded configurations, both activations.
TEST(Backward, GradientsMatchFiniteDifferences) {
  const std::vector<std::vector<int>> archs = {
      {2, 5, 5, 1}, {2, 8, 1}, {2, 3, 3, 3, 1}, {2, 15, 15, 1}, {2, 1, 1}};
  int checked = 0;
  for (ActivationKind kind : {ActivationKind::hermite, ActivationKind::sigmoid}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Activation act{kind, 5};
      NetworkParams p = init_params(archs[seed % archs.size()], act, seed);
      std::mt19937_64 gen(seed * 77 + 13);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      const double x = unit(gen), y = unit(gen), target = unit(gen);

      const ForwardTrace trace = forward(p, x, y);
      const Eigen::VectorXd analytic =
          flatten(p, backward(p, trace, target));

      Eigen::VectorXd w = flatten(p);
      const double h = 1e-6;
      for (int k = 0; k < w.size(); ++k) {
        const double saved = w(k);
        w(k) = saved + h;
        unflatten(w, p);
        const double above = std::pow(target - forward(p, x, y).output, 2.0);
        w(k) = saved - h;
        unflatten(w, p);
        const double below = std::pow(target - forward(p, x, y).output, 2.0);
        w(k) = saved;
        const double fd = (above - below) / (2.0 * h);
        const double scale =
            std::max({1.0, std::abs(analytic(k)), std::abs(fd)});
        EXPECT_LE(std::abs(analytic(k) - fd), 1e-5 * scale)
            << "seed=" << seed << " k=" << k;
      }
      unflatten(w, p);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(FlattenUnflatten, RoundTripsExactly) {
  NetworkParams p = init_params({2, 4, 3, 1}, kHermite, 31);
  const Eigen::VectorXd flat = flatten(p);
  NetworkParams q = init_params({2, 4, 3, 1}, kHermite, 99);
  unflatten(flat, q);
  EXPECT_EQ(flatten(q), flat);
  Eigen::VectorXd wrong = Eigen::VectorXd::Zero(flat.size() + 1);
  EXPECT_THROW(unflatten(wrong, p), hermnn::ConfigError);
}

TEST(ParamsCsv, LayoutAndRoundTrip) {
  NetworkParams p = init_params({2, 2, 1}, kHermite, 17);
  const std::string csv = params_to_csv(p);
  std::stringstream ss(csv);
  std::string line;
  ASSERT_TRUE(std::getline(ss, line));
  EXPECT_EQ(line, "layer,row,col,value");
  int rows = 0;
  bool saw_bias = false;
  while (std::getline(ss, line)) {
    int layer, row, col;
    char val[64];
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%d,%63s", &layer, &row, &col,
                          val),
              4);
    if (col == -1) {
      saw_bias = true;
    } else {
      const double parsed = std::strtod(val, nullptr);
      EXPECT_EQ(parsed, p.weights[layer](row, col));
    }
    ++rows;
  }
  EXPECT_TRUE(saw_bias);
  // 2x2 + 2 biases + 1x2 + 1 bias
  EXPECT_EQ(rows, 9);
}

}  // namespace
