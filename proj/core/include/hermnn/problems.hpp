#pragma once

#include <functional>
#include <string>

#include "hermnn/collocation.hpp"

namespace hermnn {

struct Domain {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;

  bool contains(double x, double y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
};

struct PhysicalConstants {
  double mass = 1.0;
  double hbar = 1.0;
  double omega = 1.0;
  double v0 = 1.0;
  double box_length = 1.0;
  int nx = 1;
  int ny = 1;
};

// A 2D time-independent Schrodinger benchmark with a known eigenpair
//   -hbar^2/(2m) lap(psi) + V psi = E psi
// plus the boundary-shaping pair (offset h1, envelope h2) used by the trial
// solution g = h1 + h2 * model.
struct Problem {
  std::string name;
  Domain domain;
  PhysicalConstants constants;
  double energy = 0.0;
  std::function<double(double, double)> potential;
  std::function<double(double, double)> analytic_psi;
  std::function<double(double, double)> offset;
  std::function<double(double, double)> envelope;
};

// Harmonic well V = v0 + m omega^2 (x^2 + y^2) / 2 on [-5,5]^2, ground
// state; E = hbar omega + v0.
Problem oscillator_problem(double mass = 1.0, double hbar = 1.0,
                           double omega = 1.0, double v0 = 1.0);

// 1D oscillator level spacing E_n = (n + 1/2) hbar omega.
double oscillator_energy_1d(int level, double hbar, double omega);

// Infinite well on [0,L]^2, mode (nx, ny), hard zero boundary;
// E = hbar^2 pi^2 (nx^2 + ny^2) / (2 m L^2).
Problem box_problem(double length = 1.0, int nx = 1, int ny = 1,
                    double mass = 1.0, double hbar = 1.0);

enum class LaplacianMode { analytic, finite_difference };

// Model with an optional closed-form Laplacian; finite_difference mode only
// needs value.
struct ScalarField {
  std::function<double(double, double)> value;
  std::function<double(double, double)> laplacian;
};

// Fourth-order 5-point central stencil per axis.
double fd_laplacian(const std::function<double(double, double)>& f, double x,
                    double y, double h = 1e-3);

inline constexpr double kFdLaplacianStep = 1e-3;

// -hbar^2/(2m) lap(model) + (V - E) model at p.
double schrodinger_residual(const Problem& problem, const ScalarField& model,
                            Point2 p, LaplacianMode mode);

// g(p) = h1(p) + h2(p) * model(p)
double trial_solution(const std::function<double(double, double)>& model,
                      const Problem& problem, Point2 p);

}  // namespace hermnn
