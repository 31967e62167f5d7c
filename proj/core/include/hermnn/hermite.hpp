#pragma once

#include <vector>

namespace hermnn {

// Normalized Hermite functions
//
//   Hn~(x) = (2^n n!)^{-1/2} e^{-x^2/2} Hn(x)
//
// with the Gaussian factor folded in, so <Hn~, Hm~> = sqrt(pi) delta_nm over
// the whole real line and values stay bounded for every degree.  All
// evaluation runs through the three-term recurrence
//
//   H0~ = e^{-x^2/2},  H1~ = sqrt(2) x e^{-x^2/2},
//   H_{n+1}~ = x sqrt(2/(n+1)) Hn~ - sqrt(n/(n+1)) H_{n-1}~.

inline constexpr int kMaxHermiteDegree = 64;

// Values H0~..HN~ at x, length N+1.
std::vector<double> eval_basis(int max_degree, double x);

// First derivatives, via Hn~' = sqrt(2n) H_{n-1}~ - x Hn~.
std::vector<double> eval_derivative_basis(int max_degree, double x);

// Second derivatives, obtained by applying the first-derivative identity
// twice.  Equals (x^2 - 2n - 1) Hn~ analytically.
std::vector<double> eval_second_derivative_basis(int max_degree, double x);

// Roots of Hn (equivalently of Hn~): eigenvalues of the symmetric
// tridiagonal Jacobi matrix with off-diagonal sqrt(k/2), polished by one
// Newton step and symmetrized about 0.  Ascending order, length n.
std::vector<double> hermite_roots(int degree);

// Gauss-Hermite weights for the modified scheme
//
//   integral f(x) dx  ~=  sum_i w_i f(x_i)
//
// absorbing e^{x^2} into the weight: w_i = sqrt(pi) / (n H_{n-1}~(x_i)^2).
// Exact for e^{-x^2} p(x) with deg p <= 2n-1.
std::vector<double> quad_weights(int degree);
std::vector<double> quad_weights(int degree, const std::vector<double>& roots);

// Closed-form <Hn~', Hm~'>: banded, nonzero only for |n - m| in {0, 2}.
double deriv_inner_product(int n, int m);

// Precomputes roots and weights for every degree 1..max_degree once.
class HermiteBasis {
 public:
  explicit HermiteBasis(int max_degree);

  int max_degree() const { return max_degree_; }
  const std::vector<double>& roots(int degree) const;
  const std::vector<double>& weights(int degree) const;

 private:
  int max_degree_;
  std::vector<std::vector<double>> roots_;
  std::vector<std::vector<double>> weights_;
};

}  // namespace hermnn
