#include "hermnn/collocation.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "hermnn/errors.hpp"
#include "hermnn/hermite.hpp"

namespace hermnn {

CollocationGrid build_grid(int basis_size, int dim,
                           std::vector<BoundaryCondition> boundary) {
  if (basis_size < 1 || basis_size + 1 > kMaxHermiteDegree) {
    throw ConfigError("build_grid: basis_size " + std::to_string(basis_size) +
                      " outside [1, " + std::to_string(kMaxHermiteDegree - 1) +
                      "]");
  }
  if (dim != 1 && dim != 2) {
    throw ConfigError("build_grid: dim must be 1 or 2, got " +
                      std::to_string(dim));
  }
  CollocationGrid grid;
  grid.basis_size = basis_size;
  grid.dim = dim;
  grid.nodes_1d = hermite_roots(basis_size + 1);
  if (dim == 2) {
    grid.nodes_2d.reserve(grid.nodes_1d.size() * grid.nodes_1d.size());
    for (double x : grid.nodes_1d) {
      for (double y : grid.nodes_1d) {
        grid.nodes_2d.push_back({x, y});
      }
    }
  }
  grid.boundary = std::move(boundary);
  return grid;
}

CollocationGrid map_to_interval(const CollocationGrid& grid, double lo,
                                double hi) {
  if (!(lo < hi)) {
    throw ConfigError("map_to_interval: need lo < hi");
  }
  if (grid.nodes_1d.size() < 2) {
    throw ConfigError("map_to_interval: grid has fewer than 2 nodes");
  }
  const double a = grid.nodes_1d.front();
  const double b = grid.nodes_1d.back();
  auto remap = [=](double t) { return lo + (t - a) * (hi - lo) / (b - a); };

  CollocationGrid out = grid;
  for (double& t : out.nodes_1d) t = remap(t);
  for (Point2& p : out.nodes_2d) p = {remap(p.x), remap(p.y)};
  for (BoundaryCondition& bc : out.boundary) {
    bc.point = {remap(bc.point.x), remap(bc.point.y)};
  }
  return out;
}

LinearOperator LinearOperator::identity() {
  auto one = [](double) { return 1.0; };
  auto zero = [](double) { return 0.0; };
  return {one, zero, zero};
}

LinearOperator LinearOperator::second_derivative() {
  auto one = [](double) { return 1.0; };
  auto zero = [](double) { return 0.0; };
  return {zero, zero, one};
}

LinearSystem assemble_system(const LinearOperator& op,
                             const CollocationGrid& grid, int degree,
                             const std::function<double(double)>& source) {
  if (grid.dim != 1) {
    throw ConfigError("assemble_system: 1D grids only");
  }
  if (degree < 0 || degree > kMaxHermiteDegree) {
    throw ConfigError("assemble_system: degree " + std::to_string(degree) +
                      " outside [0, " + std::to_string(kMaxHermiteDegree) +
                      "]");
  }
  if (!op.c0 || !op.c1 || !op.c2) {
    throw ConfigError("assemble_system: operator has empty coefficient");
  }
  if (!source) {
    throw ConfigError("assemble_system: empty source");
  }
  const int cols = degree + 1;
  const int interior = static_cast<int>(grid.nodes_1d.size());
  const int rows = interior + static_cast<int>(grid.boundary.size());
  if (interior == 0) {
    throw ConfigError("assemble_system: grid has no nodes");
  }

  LinearSystem sys;
  sys.matrix.resize(rows, cols);
  sys.rhs.resize(rows);
  for (int i = 0; i < interior; ++i) {
    const double z = grid.nodes_1d[i];
    std::vector<double> h = eval_basis(degree, z);
    std::vector<double> d1 = eval_derivative_basis(degree, z);
    std::vector<double> d2 = eval_second_derivative_basis(degree, z);
    const double c0 = op.c0(z), c1 = op.c1(z), c2 = op.c2(z);
    for (int n = 0; n < cols; ++n) {
      sys.matrix(i, n) = c0 * h[n] + c1 * d1[n] + c2 * d2[n];
    }
    sys.rhs(i) = source(z);
  }
  for (size_t b = 0; b < grid.boundary.size(); ++b) {
    const double z = grid.boundary[b].point.x;
    std::vector<double> h = eval_basis(degree, z);
    for (int n = 0; n < cols; ++n) {
      sys.matrix(interior + b, n) = h[n];
    }
    sys.rhs(interior + b) = grid.boundary[b].value;
  }
  return sys;
}

WeightSolution solve_weights(const LinearSystem& system) {
  if (system.matrix.rows() != system.rhs.size()) {
    throw ConfigError("solve_weights: matrix rows " +
                      std::to_string(system.matrix.rows()) + " vs rhs size " +
                      std::to_string(system.rhs.size()));
  }
  if (system.matrix.rows() == 0 || system.matrix.cols() == 0) {
    throw ConfigError("solve_weights: empty system");
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      system.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  const double condition = (smin > 0.0) ? smax / smin
                                        : std::numeric_limits<double>::infinity();
  if (!(condition < 1e12)) {
    throw NumericalError("solve_weights: condition number " +
                         std::to_string(condition) + " exceeds 1e12");
  }
  WeightSolution sol;
  sol.weights = svd.solve(system.rhs);
  sol.residual_norm = (system.matrix * sol.weights - system.rhs).norm();
  sol.condition = condition;
  return sol;
}

double evaluate_expansion(const Eigen::VectorXd& weights, double x) {
  if (weights.size() == 0) {
    throw ConfigError("evaluate_expansion: empty weights");
  }
  const int degree = static_cast<int>(weights.size()) - 1;
  std::vector<double> h = eval_basis(degree, x);
  double acc = 0.0;
  for (int n = 0; n <= degree; ++n) acc += weights(n) * h[n];
  return acc;
}

namespace {

int tensor_side(const Eigen::VectorXd& weights, const char* fn) {
  const int len = static_cast<int>(weights.size());
  const int side = static_cast<int>(std::lround(std::sqrt(double(len))));
  if (len == 0 || side * side != len) {
    throw ConfigError(std::string(fn) + ": weight count " +
                      std::to_string(len) + " is not a perfect square");
  }
  return side;
}

}  // namespace

double evaluate_expansion(const Eigen::VectorXd& weights, double x, double y) {
  const int side = tensor_side(weights, "evaluate_expansion");
  const int degree = side - 1;
  std::vector<double> hx = eval_basis(degree, x);
  std::vector<double> hy = eval_basis(degree, y);
  double acc = 0.0;
  for (int n = 0; n <= degree; ++n) {
    for (int m = 0; m <= degree; ++m) {
      acc += weights(n * side + m) * hx[n] * hy[m];
    }
  }
  return acc;
}

double expansion_laplacian(const Eigen::VectorXd& weights, double x, double y) {
  const int side = tensor_side(weights, "expansion_laplacian");
  const int degree = side - 1;
  std::vector<double> hx = eval_basis(degree, x);
  std::vector<double> hy = eval_basis(degree, y);
  std::vector<double> sx = eval_second_derivative_basis(degree, x);
  std::vector<double> sy = eval_second_derivative_basis(degree, y);
  double acc = 0.0;
  for (int n = 0; n <= degree; ++n) {
    for (int m = 0; m <= degree; ++m) {
      acc += weights(n * side + m) * (sx[n] * hy[m] + hx[n] * sy[m]);
    }
  }
  return acc;
}

}  // namespace hermnn
