#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace hermnn {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct BoundaryCondition {
  Point2 point;
  double value = 0.0;
};

// Collocation nodes for expansions of degree M: the M+1 roots of H_{M+1}.
// dim == 2 takes the tensor square of the 1D nodes.
struct CollocationGrid {
  int basis_size = 0;  // M
  int dim = 1;
  std::vector<double> nodes_1d;
  std::vector<Point2> nodes_2d;
  std::vector<BoundaryCondition> boundary;
};

CollocationGrid build_grid(int basis_size, int dim,
                           std::vector<BoundaryCondition> boundary = {});

// Affine image of every node (and boundary point) into [lo, hi], taking the
// extreme 1D nodes to the interval endpoints.  Needs basis_size >= 1.
CollocationGrid map_to_interval(const CollocationGrid& grid, double lo,
                                double hi);

// L(u) = c0 u + c1 u' + c2 u'' with spatially varying coefficients.
struct LinearOperator {
  std::function<double(double)> c0;
  std::function<double(double)> c1;
  std::function<double(double)> c2;

  static LinearOperator identity();
  static LinearOperator second_derivative();
};

struct LinearSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

// Rows: L(Hn~)(z_i) over interior nodes, then Hn~(z_b) over boundary nodes
// with the boundary values on the right-hand side.  Columns n = 0..degree.
// 1D grids only.
LinearSystem assemble_system(const LinearOperator& op,
                             const CollocationGrid& grid, int degree,
                             const std::function<double(double)>& source);

struct WeightSolution {
  Eigen::VectorXd weights;
  double residual_norm = 0.0;
  double condition = 0.0;
};

// Least-squares solve through an SVD; condition above 1e12 is rejected.
WeightSolution solve_weights(const LinearSystem& system);

double evaluate_expansion(const Eigen::VectorXd& weights, double x);

// Tensor expansion sum_{n,m} W[n*(N+1)+m] Hn~(x) Hm~(y); weights length must
// be a perfect square.
double evaluate_expansion(const Eigen::VectorXd& weights, double x, double y);
double expansion_laplacian(const Eigen::VectorXd& weights, double x, double y);

}  // namespace hermnn
