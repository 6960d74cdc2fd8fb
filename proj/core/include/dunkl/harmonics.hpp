#pragma once

#include <string>
#include <vector>

#include "dunkl/dunkl_core.hpp"

namespace dunkl {

/// Quadrature on S^1 for the measure w_k dsigma.
///
/// Built from a Gauss-Jacobi rule in u = cos(2 theta) whose nodes are mirrored
/// into all four quadrants, so any f with an even-in-each-coordinate part that
/// is a polynomial of degree <= exact_degree is integrated exactly.
struct SphereQuadrature {
  std::vector<Point> nodes;
  std::vector<double> weights;     // sum_i weights[i] * w_k(nodes[i]) = d_k
  std::vector<double> normalized;  // weights[i] * w_k(nodes[i]) / d_k
  int exact_degree = 0;

  std::size_t size() const noexcept { return nodes.size(); }
};

SphereQuadrature sphere_quadrature(const MultiplicityVector& k, int nodes = 128);

/// Homogeneous polynomial on R^2: coeffs[a] multiplies x1^a x2^{n-a}.
struct HarmonicPolynomial {
  int degree = 0;
  std::vector<double> coeffs;

  double operator()(const Point& x) const;
  cplx operator()(const ComplexPoint& x) const;
};

/// (n + lambda)(2 lambda)_n / (lambda n!), with its limit 2 (n >= 1) at lambda = 0.
double reproducing_coefficient(double lambda, int n);

/// Exact Delta_k of a homogeneous polynomial (degree drops by two).
HarmonicPolynomial apply_dunkl_laplacian(const MultiplicityVector& k, const HarmonicPolynomial& p);

/// Orthonormal basis of H_n^k in L^2(S^1, w_k dsigma / d_k). Requires N = 2, 0 <= n <= 8.
const std::vector<HarmonicPolynomial>& harmonic_basis(const MultiplicityVector& k, int n);

std::string harmonic_basis_json(const MultiplicityVector& k, int n);

/// V_k applied to C_n^lambda(<x, .>) at y, both on the unit circle.
double intertwined_gegenbauer(const MultiplicityVector& k, int n, const Point& x, const Point& y,
                              int nodes = 32);

/// P_n^k(x, y) for real x, y, extended off the sphere by homogeneity.
double reproducing_kernel_P(const MultiplicityVector& k, int n, const Point& x, const Point& y,
                            int nodes = 32);

/// Partial sum through n_max of the expansion of E_k(ix, y) in j_{n+lambda} P_n^k.
cplx kernel_series(const MultiplicityVector& k, const Point& x, const Point& y, int n_max,
                   int nodes = 32);

/// Upper bound for the tail beyond n_max from |j| <= 1 and |P_n| <= coefficient * |x|^n |y|^n.
double kernel_series_tail_bound(const MultiplicityVector& k, const Point& x, const Point& y,
                                int n_max);

/// (1/d_k) int E_k(ix, y) Y(y) w_k(y) dsigma(y) by sphere quadrature.
/// Rejects Y if its exact Delta_k is not zero.
cplx funk_hecke(const MultiplicityVector& k, const Point& x, const HarmonicPolynomial& Y,
                const SphereQuadrature& rule);

/// Gamma(lambda+1) / (2^n Gamma(n+lambda+1)) j_{n+lambda}(|x|) Y(ix).
cplx funk_hecke_closed_form(const MultiplicityVector& k, const Point& x,
                            const HarmonicPolynomial& Y);

/// |j_lambda(sqrt(s^2+t^2-2st cos theta)) - partial sum through n_max|.
double addition_theorem_residual(double lambda, double s, double t, double theta, int n_max);

/// |e^{irt} - partial sum through n_max| of the expansion in j_{n+lambda}(r) C_n^lambda(t).
double expansion_residual(double lambda, double r, double t, int n_max);

struct OrbitIntegral {
  double sphere;
  double intertwiner;
};

/// Both evaluations of I(x, z, r); throws ConsistencyError if they differ by more than tol.
OrbitIntegral orbit_integral_routes(const MultiplicityVector& k, const Point& x, const Point& z,
                                    double r, const SphereQuadrature& rule, double tol = 1e-6,
                                    int nodes = 48);

/// I(x, z, r) = (1/d_k) int E_k(ix, r xi) E_k(-iz, r xi) w_k(xi) dsigma(xi).
double orbit_integral_I(const MultiplicityVector& k, const Point& x, const Point& z, double r,
                        const SphereQuadrature& rule);

}  // namespace dunkl
