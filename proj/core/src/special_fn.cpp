#include "dunkl/special_fn.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

// Below this modulus the power series is summed directly. Real arguments
// beyond it go through J_alpha, where the alternating series would cancel.
constexpr double kSeriesRadius = 12.0;
constexpr int kMaxSeriesTerms = 2000;

std::complex<long double> series_j(long double alpha, std::complex<long double> z) {
  const std::complex<long double> q = -(z * z) / 4.0L;
  std::complex<long double> term = 1.0L;
  std::complex<long double> sum = 1.0L;
  const long double tiny = 1e-19L;
  for (int m = 1; m < kMaxSeriesTerms; ++m) {
    term *= q / (static_cast<long double>(m) * (m + alpha));
    sum += term;
    if (std::abs(term) <= tiny * std::abs(sum) && m > std::abs(z) / 2) return sum;
  }
  throw NumericalError("bessel_j: power series did not converge");
}

}  // namespace

BesselIndex::BesselIndex(double alpha) : alpha_(alpha) {
  if (!(alpha >= -0.5)) throw DomainError("bessel index must satisfy alpha >= -1/2");
}

double bessel_j(BesselIndex index, double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
  const double alpha = index.value();
  const double ax = std::abs(x);
  if (ax <= kSeriesRadius) {
    return static_cast<double>(series_j(alpha, std::complex<long double>(ax, 0.0L)).real());
  }
  // j_a(x) = Gamma(a+1) (x/2)^{-a} J_a(x)
  const double scale =
      std::exp(boost::math::lgamma(alpha + 1.0) - alpha * std::log(ax / 2.0));
  return scale * boost::math::cyl_bessel_j(alpha, ax);
}

cplx bessel_j(BesselIndex index, cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("bessel_j: non-finite argument");
  if (z.imag() == 0.0) return bessel_j(index, z.real());
  const auto s = series_j(index.value(), std::complex<long double>(z.real(), z.imag()));
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

double bessel_i_ratio(double nu, double u) {
  if (u < 0.0) throw DomainError("bessel_i_ratio: u must be nonnegative");
  if (!(nu >= -1.0)) throw DomainError("bessel_i_ratio: nu must be >= -1");
  if (u == 0.0) return nu == -1.0 ? INFINITY : 0.0;
  if (u <= 600.0) {
    if (u < 1e-150) return u / (2.0 * (nu + 1.0));
    return boost::math::cyl_bessel_i(nu + 1.0, u) / boost::math::cyl_bessel_i(nu, u);
  }
  // e^{-u} I_mu(u) sqrt(2 pi u) ~ sum_m (-1)^m prod_{j<=m} (4mu^2 - (2j-1)^2) / (m! (8u)^m).
  auto scaled = [u](double mu) {
    const double m4 = 4.0 * mu * mu;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 60; ++m) {
      term *= -(m4 - (2.0 * m - 1.0) * (2.0 * m - 1.0)) / (m * 8.0 * u);
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
    }
    throw NumericalError("bessel_i_ratio: asymptotic expansion did not converge");
  };
  return scaled(nu + 1.0) / scaled(nu);
}

double gegenbauer(GegenbauerIndex idx, double t) {
  if (idx.n < 0) throw DomainError("gegenbauer: degree must be nonnegative");
  if (!(idx.lambda >= 0.0)) throw DomainError("gegenbauer: lambda must be nonnegative");
  if (idx.n == 0) return 1.0;
  // (n + 2l) p_{n+1} = 2 (n + l) t p_n - n p_{n-1}, normalized so p_n(1) = 1.
  double prev = 1.0, cur = t;
  for (int n = 1; n < idx.n; ++n) {
    const double next = (2.0 * (n + idx.lambda) * t * cur - n * prev) / (n + 2.0 * idx.lambda);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer_hypergeometric(GegenbauerIndex idx, double t) {
  if (idx.n < 0) throw DomainError("gegenbauer: degree must be nonnegative");
  if (!(idx.lambda >= 0.0)) throw DomainError("gegenbauer: lambda must be nonnegative");
  // The alternating sum cancels badly; 50 digits absorb it for moderate n.
  using big = boost::multiprecision::cpp_bin_float_50;
  const double sign = t < 0.0 && idx.n % 2 == 1 ? -1.0 : 1.0;
  const big x = (big(1) - std::abs(t)) / 2;
  const big b = big(idx.n) + 2 * big(idx.lambda);
  const big c = big(idx.lambda) + big(0.5);
  big term = 1, sum = 1;
  for (int j = 0; j < idx.n; ++j) {
    term *= big(j - idx.n) * (b + j) / ((c + j) * (j + 1)) * x;
    sum += term;
  }
  return sign * static_cast<double>(sum);
}

double log_gamma(double x) { return boost::math::lgamma(x); }

double log_pochhammer(double a, int n) {
  if (!(a > 0.0)) throw DomainError("log_pochhammer: a must be positive");
  return boost::math::lgamma(a + n) - boost::math::lgamma(a);
}

double pochhammer(double a, int n) {
  double p = 1.0;
  for (int j = 0; j < n; ++j) p *= a + j;
  return p;
}

double series_coefficient(double lambda, int n) {
  return std::exp(boost::math::lgamma(lambda + 1.0) - n * std::numbers::ln2 -
                  boost::math::lgamma(n + lambda + 1.0));
}

double riemann_liouville(const std::function<double(double)>& f, double alpha,
                         double t, double tol) {
  if (!(alpha > -0.5)) throw DomainError("riemann_liouville: alpha must exceed -1/2");
  if (t < 0.0) throw DomainError("riemann_liouville: t must be nonnegative");
  const double beta = alpha - 0.5;
  const double norm = 2.0 * std::exp(boost::math::lgamma(alpha + 1.0) -
                                     boost::math::lgamma(0.5) -
                                     boost::math::lgamma(alpha + 0.5));
  // s = (1+u)/2 on [0,1]; (1-s)^beta is the Jacobi weight, (1+s)^beta is smooth.
  auto evaluate = [&](int n) {
    const QuadratureRule& rule = gauss_jacobi(n, beta, 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double s = 0.5 * (1.0 + rule.nodes[i]);
      acc += rule.weights[i] * f(s * t) * std::pow(1.0 + s, beta);
    }
    return norm * std::pow(2.0, -beta - 1.0) * acc;
  };
  double prev = evaluate(16);
  for (int n = 32; n <= 1024; n *= 2) {
    const double cur = evaluate(n);
    if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  throw NumericalError("riemann_liouville: Gauss-Jacobi rule did not converge");
}

double sturm_liouville_fd(const std::function<double(double)>& u, double alpha,
                          double t, double h) {
  if (!(t > h)) throw DomainError("sturm_liouville_fd: need t > h");
  const double up = u(t + h), u0 = u(t), um = u(t - h);
  return (up - 2.0 * u0 + um) / (h * h) + (2.0 * alpha + 1.0) / t * (up - um) / (2.0 * h);
}

}  // namespace dunkl
