#include "hermnn/hermite.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "hermnn/errors.hpp"

namespace hermnn {

namespace {

void check_degree(int degree, int lo, const char* fn) {
  if (degree < lo || degree > kMaxHermiteDegree) {
    throw ConfigError(std::string(fn) + ": degree " + std::to_string(degree) +
                      " outside [" + std::to_string(lo) + ", " +
                      std::to_string(kMaxHermiteDegree) + "]");
  }
}

void check_finite_arg(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw ConfigError(std::string(fn) + ": non-finite argument");
  }
}

}  // namespace

std::vector<double> eval_basis(int max_degree, double x) {
  check_degree(max_degree, 0, "eval_basis");
  check_finite_arg(x, "eval_basis");
  std::vector<double> h(max_degree + 1);
  h[0] = std::exp(-0.5 * x * x);
  if (max_degree >= 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int n = 1; n < max_degree; ++n) {
    h[n + 1] = x * std::sqrt(2.0 / (n + 1)) * h[n] -
               std::sqrt(double(n) / (n + 1)) * h[n - 1];
  }
  return h;
}

std::vector<double> eval_derivative_basis(int max_degree, double x) {
  std::vector<double> h = eval_basis(max_degree, x);
  std::vector<double> d(max_degree + 1);
  d[0] = -x * h[0];
  for (int n = 1; n <= max_degree; ++n) {
    d[n] = std::sqrt(2.0 * n) * h[n - 1] - x * h[n];
  }
  return d;
}

std::vector<double> eval_second_derivative_basis(int max_degree, double x) {
  std::vector<double> h = eval_basis(max_degree, x);
  std::vector<double> d = eval_derivative_basis(max_degree, x);
  // Hn~'' = sqrt(2n) H_{n-1}~' - Hn~ - x Hn~'
  std::vector<double> s(max_degree + 1);
  s[0] = -h[0] - x * d[0];
  for (int n = 1; n <= max_degree; ++n) {
    s[n] = std::sqrt(2.0 * n) * d[n - 1] - h[n] - x * d[n];
  }
  return s;
}

std::vector<double> hermite_roots(int degree) {
  check_degree(degree, 1, "hermite_roots");
  const int n = degree;
  std::vector<double> roots(n);
  if (n == 1) {
    roots[0] = 0.0;
    return roots;
  }

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k - 1, k) = std::sqrt(0.5 * k);
    jacobi(k, k - 1) = jacobi(k - 1, k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermite_roots: eigensolve failed for degree " +
                         std::to_string(degree));
  }
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending

  // Average the symmetric pair, polish the negative representative with one
  // Newton step, then mirror so the set is exactly symmetric about 0.
  for (int i = 0; i < n / 2; ++i) {
    double r = 0.5 * (ev(i) - ev(n - 1 - i));
    std::vector<double> h = eval_basis(n, r);
    std::vector<double> d = eval_derivative_basis(n, r);
    if (d[n] != 0.0) r -= h[n] / d[n];
    double residual = std::abs(eval_basis(n, r)[n]);
    if (!std::isfinite(r) || residual > 1e-9) {
      throw NumericalError("hermite_roots: Newton polish failed for degree " +
                           std::to_string(degree));
    }
    roots[i] = r;
    roots[n - 1 - i] = -r;
  }
  if (n % 2 == 1) roots[n / 2] = 0.0;
  return roots;
}

std::vector<double> quad_weights(int degree, const std::vector<double>& roots) {
  check_degree(degree, 1, "quad_weights");
  if (static_cast<int>(roots.size()) != degree) {
    throw ConfigError("quad_weights: expected " + std::to_string(degree) +
                      " roots, got " + std::to_string(roots.size()));
  }
  const double sqrt_pi = std::sqrt(M_PI);
  std::vector<double> w(degree);
  for (int i = 0; i < degree; ++i) {
    double hprev = eval_basis(degree - 1, roots[i])[degree - 1];
    w[i] = sqrt_pi / (degree * hprev * hprev);
    if (!std::isfinite(w[i]) || w[i] <= 0.0) {
      throw NumericalError("quad_weights: bad weight at node " +
                           std::to_string(i) + " for degree " +
                           std::to_string(degree));
    }
  }
  return w;
}

std::vector<double> quad_weights(int degree) {
  return quad_weights(degree, hermite_roots(degree));
}

double deriv_inner_product(int n, int m) {
  if (n < 0 || m < 0) {
    throw ConfigError("deriv_inner_product: negative degree");
  }
  if (n < m) std::swap(n, m);
  const double sqrt_pi = std::sqrt(M_PI);
  if (n == m) return (n + 0.5) * sqrt_pi;
  if (n == m + 2) return -0.5 * std::sqrt(M_PI * n * (n - 1));
  return 0.0;
}

HermiteBasis::HermiteBasis(int max_degree) : max_degree_(max_degree) {
  check_degree(max_degree, 1, "HermiteBasis");
  roots_.resize(max_degree + 1);
  weights_.resize(max_degree + 1);
  for (int d = 1; d <= max_degree; ++d) {
    roots_[d] = hermite_roots(d);
    weights_[d] = quad_weights(d, roots_[d]);
  }
}

const std::vector<double>& HermiteBasis::roots(int degree) const {
  if (degree < 1 || degree > max_degree_) {
    throw ConfigError("HermiteBasis::roots: degree " + std::to_string(degree) +
                      " not cached (max " + std::to_string(max_degree_) + ")");
  }
  return roots_[degree];
}

const std::vector<double>& HermiteBasis::weights(int degree) const {
  if (degree < 1 || degree > max_degree_) {
    throw ConfigError("HermiteBasis::weights: degree " +
                      std::to_string(degree) + " not cached (max " +
                      std::to_string(max_degree_) + ")");
  }
  return weights_[degree];
}

}  // namespace hermnn
