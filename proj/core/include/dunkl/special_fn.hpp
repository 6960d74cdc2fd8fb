#pragma once

#include <complex>
#include <functional>

namespace dunkl {

using cplx = std::complex<double>;

/// Index of the normalized Bessel function j_alpha; alpha >= -1/2.
class BesselIndex {
 public:
  explicit BesselIndex(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Degree and parameter of the renormalized Gegenbauer polynomial.
struct GegenbauerIndex {
  int n;
  double lambda;
};

/// Normalized spherical Bessel function
///   j_a(z) = Gamma(a+1) * sum_n (-1)^n (z/2)^{2n} / (n! Gamma(n+a+1)),
/// so that j_a(0) = 1 and j_a is even. Real arguments beyond the series
/// range are routed through Boost's J_a; everything else uses the power
/// series in extended precision.
cplx bessel_j(BesselIndex alpha, cplx z);
double bessel_j(BesselIndex alpha, double x);

/// Ratio I_{nu+1}(u) / I_nu(u) for u >= 0 and nu >= -1; large-argument expansion beyond u = 600.
double bessel_i_ratio(double nu, double u);

/// Renormalized Gegenbauer polynomial with value 1 at t = 1
/// (three-term recurrence; stable on [-1, 1]).
double gegenbauer(GegenbauerIndex idx, double t);

/// Same polynomial via the terminating 2F1(-n, n+2l; l+1/2; (1-t)/2) sum.
double gegenbauer_hypergeometric(GegenbauerIndex idx, double t);

double log_gamma(double x);

/// log of the Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a), a > 0.
double log_pochhammer(double a, int n);

/// (a)_n by direct product; exact for a = 0.
double pochhammer(double a, int n);

/// Gamma(l+1) / (2^n Gamma(n+l+1)), evaluated in log space.
double series_coefficient(double lambda, int n);

/// Riemann-Liouville transform
///   R_a f(t) = 2 Gamma(a+1)/(Gamma(1/2) Gamma(a+1/2)) int_0^1 f(st)(1-s^2)^{a-1/2} ds
/// with alpha > -1/2. The endpoint factor is absorbed into a Gauss-Jacobi rule;
/// the rule is doubled until two successive values agree to `tol`.
double riemann_liouville(const std::function<double(double)>& f, double alpha,
                         double t, double tol = 1e-13);

/// Singular Sturm-Liouville operator A_a = d^2/dt^2 + (2a+1)/t d/dt applied by
/// central differences with step h.
double sturm_liouville_fd(const std::function<double(double)>& u, double alpha,
                          double t, double h);

}  // namespace dunkl
