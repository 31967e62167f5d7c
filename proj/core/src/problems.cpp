#include "hermnn/problems.hpp"

#include <cmath>
#include <string>

#include "hermnn/errors.hpp"

namespace hermnn {

Problem oscillator_problem(double mass, double hbar, double omega, double v0) {
  if (!(mass > 0.0) || !(hbar > 0.0) || !(omega > 0.0)) {
    throw ConfigError("oscillator_problem: mass, hbar, omega must be > 0");
  }
  if (!std::isfinite(v0)) {
    throw ConfigError("oscillator_problem: non-finite v0");
  }
  Problem p;
  p.name = "oscillator";
  p.domain = {-5.0, 5.0, -5.0, 5.0};
  p.constants.mass = mass;
  p.constants.hbar = hbar;
  p.constants.omega = omega;
  p.constants.v0 = v0;
  p.energy = hbar * omega + v0;
  const double k = 0.5 * mass * omega * omega;
  p.potential = [v0, k](double x, double y) {
    return v0 + k * (x * x + y * y);
  };
  const double alpha = mass * omega / hbar;
  const double norm = std::sqrt(alpha / M_PI);
  p.analytic_psi = [alpha, norm](double x, double y) {
    return norm * std::exp(-0.5 * alpha * (x * x + y * y));
  };
  p.offset = [](double, double) { return 0.0; };
  p.envelope = [](double x, double y) {
    return std::exp(-0.5 * (x * x + y * y));
  };
  return p;
}

double oscillator_energy_1d(int level, double hbar, double omega) {
  if (level < 0) {
    throw ConfigError("oscillator_energy_1d: negative level");
  }
  if (!(hbar > 0.0) || !(omega > 0.0)) {
    throw ConfigError("oscillator_energy_1d: hbar, omega must be > 0");
  }
  return (level + 0.5) * hbar * omega;
}

Problem box_problem(double length, int nx, int ny, double mass, double hbar) {
  if (!(length > 0.0)) {
    throw ConfigError("box_problem: length must be > 0");
  }
  if (nx < 1 || ny < 1) {
    throw ConfigError("box_problem: mode numbers must be >= 1");
  }
  if (!(mass > 0.0) || !(hbar > 0.0)) {
    throw ConfigError("box_problem: mass, hbar must be > 0");
  }
  Problem p;
  p.name = "box";
  p.domain = {0.0, length, 0.0, length};
  p.constants.mass = mass;
  p.constants.hbar = hbar;
  p.constants.box_length = length;
  p.constants.nx = nx;
  p.constants.ny = ny;
  p.energy = hbar * hbar * M_PI * M_PI * (nx * nx + ny * ny) /
             (2.0 * mass * length * length);
  p.potential = [](double, double) { return 0.0; };
  const double kx = nx * M_PI / length;
  const double ky = ny * M_PI / length;
  const double norm = 2.0 / length;
  p.analytic_psi = [kx, ky, norm](double x, double y) {
    return norm * std::sin(kx * x) * std::sin(ky * y);
  };
  p.offset = [](double, double) { return 0.0; };
  // x(L-x)y(L-y) scaled so the interior maximum is 1
  const double scale = 1.0 / std::pow(0.5 * length, 4);
  p.envelope = [length, scale](double x, double y) {
    return scale * x * (length - x) * y * (length - y);
  };
  return p;
}

double fd_laplacian(const std::function<double(double, double)>& f, double x,
                    double y, double h) {
  if (!f) throw ConfigError("fd_laplacian: empty function");
  if (!(h > 0.0)) throw ConfigError("fd_laplacian: step must be > 0");
  const double c = 1.0 / (12.0 * h * h);
  const double fxy = f(x, y);
  const double dxx = c * (-f(x + 2 * h, y) + 16.0 * f(x + h, y) - 30.0 * fxy +
                          16.0 * f(x - h, y) - f(x - 2 * h, y));
  const double dyy = c * (-f(x, y + 2 * h) + 16.0 * f(x, y + h) - 30.0 * fxy +
                          16.0 * f(x, y - h) - f(x, y - 2 * h));
  return dxx + dyy;
}

double schrodinger_residual(const Problem& problem, const ScalarField& model,
                            Point2 p, LaplacianMode mode) {
  if (!model.value) {
    throw ConfigError("schrodinger_residual: model has no value function");
  }
  if (!problem.domain.contains(p.x, p.y)) {
    throw ConfigError("schrodinger_residual: point outside domain");
  }
  double lap;
  if (mode == LaplacianMode::analytic) {
    if (!model.laplacian) {
      throw ConfigError(
          "schrodinger_residual: analytic mode needs model.laplacian");
    }
    lap = model.laplacian(p.x, p.y);
  } else {
    const double h = kFdLaplacianStep;
    const Domain& d = problem.domain;
    if (!d.contains(p.x - 2 * h, p.y - 2 * h) ||
        !d.contains(p.x + 2 * h, p.y + 2 * h)) {
      throw ConfigError(
          "schrodinger_residual: finite-difference stencil leaves domain");
    }
    lap = fd_laplacian(model.value, p.x, p.y, h);
  }
  const double psi = model.value(p.x, p.y);
  const PhysicalConstants& c = problem.constants;
  return -c.hbar * c.hbar / (2.0 * c.mass) * lap +
         (problem.potential(p.x, p.y) - problem.energy) * psi;
}

double trial_solution(const std::function<double(double, double)>& model,
                      const Problem& problem, Point2 p) {
  if (!model) throw ConfigError("trial_solution: empty model");
  if (!problem.domain.contains(p.x, p.y)) {
    throw ConfigError("trial_solution: point outside domain");
  }
  return problem.offset(p.x, p.y) + problem.envelope(p.x, p.y) * model(p.x, p.y);
}

}  // namespace hermnn
