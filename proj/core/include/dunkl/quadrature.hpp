#pragma once

#include <functional>
#include <vector>

namespace dunkl {

/// Nodes and weights of a one-dimensional rule: sum_i w_i f(x_i).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double integrate(const std::function<double(double)>& f) const;

  /// Affine image of a rule on [-1, 1] onto [a, b]. Weights are scaled by
  /// `scale`, which the caller sets to account for any weight function.
  QuadratureRule mapped(double a, double b, double scale) const;
};

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b on [-1, 1], a, b > -1.
/// Computed by Golub-Welsch and cached; safe to call concurrently.
const QuadratureRule& gauss_jacobi(int n, double a, double b);

/// Generalized Gauss-Laguerre rule for x^a e^{-x} on [0, inf), a > -1.
const QuadratureRule& gauss_laguerre(int n, double a);

inline const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// Integral of f against (s-lo)^a (hi-s)^b ds over [lo, hi].
double integrate_jacobi(const std::function<double(double)>& f, double lo,
                        double hi, double a, double b, int n);

/// Adaptive Gauss-Kronrod on a finite interval (Boost backed).
/// Throws NumericalError when the error estimate exceeds `tol`.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double tol = 1e-12);

/// Same on [a, inf).
double integrate_adaptive_tail(const std::function<double(double)>& f, double a,
                               double tol = 1e-12);

}  // namespace dunkl
