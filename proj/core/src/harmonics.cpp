#include "dunkl/harmonics.hpp"

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <json.hpp>
#include <map>
#include <mutex>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rank_one.hpp"

namespace dunkl {
namespace {

void require_plane(const MultiplicityVector& k, const char* what) {
  if (k.dim() != 2) throw DomainError(std::string(what) + ": requires N = 2");
}

double norm2(const Point& x) { return std::hypot(x[0], x[1]); }

Point unit(const Point& x) {
  const double r = norm2(x);
  return {x[0] / r, x[1] / r};
}

cplx i_pow(int n) {
  static const cplx table[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return table[n % 4];
}

// a(a-1) + 2 k a - k (1 - (-1)^a): coefficient of x^{a-2} in the rank-one Delta_k x^a.
double monomial_factor(double k, int a) {
  const double parity = (a % 2 == 0) ? 0.0 : 2.0;
  return a * (a - 1.0) + 2.0 * k * a - k * parity;
}

double inner(const SphereQuadrature& rule, const HarmonicPolynomial& p,
             const HarmonicPolynomial& q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    acc += rule.normalized[i] * p(rule.nodes[i]) * q(rule.nodes[i]);
  return acc;
}

std::vector<HarmonicPolynomial> build_basis(const MultiplicityVector& k, int n) {
  if (n == 0) return {HarmonicPolynomial{0, {1.0}}};
  std::vector<Eigen::VectorXd> kernel;
  if (n == 1) {
    kernel.push_back(Eigen::Vector2d(1.0, 0.0));
    kernel.push_back(Eigen::Vector2d(0.0, 1.0));
  } else {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n - 1, n + 1);
    for (int a = 0; a <= n; ++a) {
      const int b = n - a;
      if (a >= 2) L(a - 2, a) += monomial_factor(k[0], a);
      if (b >= 2) L(a, a) += monomial_factor(k[1], b);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(L, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double scale = sv.size() > 0 ? sv(0) : 1.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > 1e-12 * scale) ++rank;
    for (int c = rank; c <= n; ++c) kernel.push_back(svd.matrixV().col(c));
  }
  if (kernel.size() != 2) throw NumericalError("harmonic_basis: unexpected dimension of ker Delta_k");

  const SphereQuadrature rule = sphere_quadrature(k, n + 8);
  std::vector<HarmonicPolynomial> basis;
  for (const auto& v : kernel) {
    HarmonicPolynomial p{n, std::vector<double>(v.data(), v.data() + v.size())};
    for (const auto& e : basis) {
      const double c = inner(rule, p, e);
      for (int a = 0; a <= n; ++a) p.coeffs[a] -= c * e.coeffs[a];
    }
    const double nrm = std::sqrt(inner(rule, p, p));
    if (!(nrm > 1e-12)) throw NumericalError("harmonic_basis: rank deficiency");
    for (double& c : p.coeffs) c /= nrm;
    basis.push_back(std::move(p));
  }
  return basis;
}

}  // namespace

SphereQuadrature sphere_quadrature(const MultiplicityVector& k, int nodes) {
  require_plane(k, "sphere_quadrature");
  const QuadratureRule& gj = gauss_jacobi(nodes, k[1] - 0.5, k[0] - 0.5);
  const double dk = constants(k).d_k;
  SphereQuadrature rule;
  rule.exact_degree = 4 * nodes - 2;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const double u = gj.nodes[i];
    const double c = std::sqrt(0.5 * (1.0 + u)), s = std::sqrt(0.5 * (1.0 - u));
    for (double sc : {1.0, -1.0}) {
      for (double ss : {1.0, -1.0}) {
        Point p{sc * c, ss * s};
        const double w = weight(k, p);
        rule.nodes.push_back(p);
        rule.weights.push_back(0.5 * gj.weights[i] / w);
        rule.normalized.push_back(0.5 * gj.weights[i] / dk);
      }
    }
  }
  return rule;
}

double HarmonicPolynomial::operator()(const Point& x) const {
  double acc = 0.0;
  for (int a = 0; a <= degree; ++a)
    acc += coeffs[a] * std::pow(x[0], a) * std::pow(x[1], degree - a);
  return acc;
}

cplx HarmonicPolynomial::operator()(const ComplexPoint& x) const {
  cplx acc = 0.0;
  for (int a = 0; a <= degree; ++a)
    acc += coeffs[a] * std::pow(x[0], a) * std::pow(x[1], degree - a);
  return acc;
}

double reproducing_coefficient(double lambda, int n) {
  if (n < 0) throw DomainError("reproducing_coefficient: negative degree");
  if (lambda == 0.0) return n == 0 ? 1.0 : 2.0;
  if (n == 0) return 1.0;
  return std::exp(std::log(n + lambda) + log_pochhammer(2.0 * lambda, n) - std::log(lambda) -
                  boost::math::lgamma(n + 1.0));
}

HarmonicPolynomial apply_dunkl_laplacian(const MultiplicityVector& k, const HarmonicPolynomial& p) {
  require_plane(k, "apply_dunkl_laplacian");
  const int n = p.degree;
  if (n < 2) return HarmonicPolynomial{0, {0.0}};
  HarmonicPolynomial out{n - 2, std::vector<double>(n - 1, 0.0)};
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    if (a >= 2) out.coeffs[a - 2] += monomial_factor(k[0], a) * p.coeffs[a];
    if (b >= 2) out.coeffs[a] += monomial_factor(k[1], b) * p.coeffs[a];
  }
  return out;
}

const std::vector<HarmonicPolynomial>& harmonic_basis(const MultiplicityVector& k, int n) {
  require_plane(k, "harmonic_basis");
  if (n < 0 || n > 8) throw DomainError("harmonic_basis: degree must be in [0, 8]");
  static std::mutex mutex;
  static std::map<std::pair<std::vector<double>, int>, std::vector<HarmonicPolynomial>> cache;
  const auto key = std::make_pair(k.values(), n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto basis = build_basis(k, n);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(basis)).first->second;
}

std::string harmonic_basis_json(const MultiplicityVector& k, int n) {
  nlohmann::json out{{"k", k.values()}, {"degree", n}, {"basis", nlohmann::json::array()}};
  for (const auto& p : harmonic_basis(k, n)) out["basis"].push_back(p.coeffs);
  return out.dump();
}

double intertwined_gegenbauer(const MultiplicityVector& k, int n, const Point& x, const Point& y,
                              int nodes) {
  require_plane(k, "intertwined_gegenbauer");
  const GegenbauerIndex idx{n, k.lambda()};
  const auto mu1 = intertwiner_measure_1d(k[0], y[0], nodes);
  const auto mu2 = intertwiner_measure_1d(k[1], y[1], nodes);
  double acc = 0.0;
  mu1.data().for_each_mass([&](double e1, double w1) {
    mu2.data().for_each_mass(
        [&](double e2, double w2) { acc += w1 * w2 * gegenbauer(idx, x[0] * e1 + x[1] * e2); });
  });
  return acc;
}

double reproducing_kernel_P(const MultiplicityVector& k, int n, const Point& x, const Point& y,
                            int nodes) {
  require_plane(k, "reproducing_kernel_P");
  if (n < 0) throw DomainError("reproducing_kernel_P: negative degree");
  const double rx = norm2(x), ry = norm2(y);
  if (rx == 0.0 || ry == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::pow(rx * ry, n) * reproducing_coefficient(k.lambda(), n) *
         intertwined_gegenbauer(k, n, unit(x), unit(y), nodes);
}

cplx kernel_series(const MultiplicityVector& k, const Point& x, const Point& y, int n_max,
                   int nodes) {
  require_plane(k, "kernel_series");
  const double lambda = k.lambda();
  const double r = norm2(x) * norm2(y);
  cplx acc = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double p = reproducing_kernel_P(k, n, x, y, nodes);
    if (p == 0.0) continue;
    acc += series_coefficient(lambda, n) * bessel_j(BesselIndex(n + lambda), r) * i_pow(n) * p;
  }
  return acc;
}

double kernel_series_tail_bound(const MultiplicityVector& k, const Point& x, const Point& y,
                                int n_max) {
  require_plane(k, "kernel_series_tail_bound");
  const double lambda = k.lambda();
  const double r = norm2(x) * norm2(y);
  double tail = 0.0;
  for (int n = n_max + 1; n <= n_max + 400; ++n) {
    const double log_term = std::log(series_coefficient(lambda, n)) +
                            std::log(reproducing_coefficient(lambda, n)) +
                            (r > 0.0 ? n * std::log(r) : -INFINITY);
    const double term = std::exp(log_term);
    tail += term;
    if (term < 1e-300 || (n > n_max + 5 && term < 1e-18 * tail)) break;
  }
  return tail;
}

cplx funk_hecke(const MultiplicityVector& k, const Point& x, const HarmonicPolynomial& Y,
                const SphereQuadrature& rule) {
  require_plane(k, "funk_hecke");
  double scale = 0.0;
  for (double c : Y.coeffs) scale = std::max(scale, std::abs(c));
  for (double c : apply_dunkl_laplacian(k, Y).coeffs)
    if (std::abs(c) > 1e-8 * std::max(scale, 1.0))
      throw DomainError("funk_hecke: Y is not k-harmonic");
  const ComplexPoint ix{cplx(0.0, x[0]), cplx(0.0, x[1])};
  cplx acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    acc += rule.normalized[i] * dunkl_kernel(k, ix, to_complex(rule.nodes[i])) * Y(rule.nodes[i]);
  return acc;
}

cplx funk_hecke_closed_form(const MultiplicityVector& k, const Point& x,
                            const HarmonicPolynomial& Y) {
  require_plane(k, "funk_hecke_closed_form");
  const int n = Y.degree;
  const double lambda = k.lambda();
  return series_coefficient(lambda, n) * bessel_j(BesselIndex(n + lambda), norm2(x)) * i_pow(n) *
         Y(x);
}

double addition_theorem_residual(double lambda, double s, double t, double theta, int n_max) {
  if (!(lambda > 0.0)) throw DomainError("addition_theorem_residual: lambda must be positive");
  const double arg = std::sqrt(std::max(s * s + t * t - 2.0 * s * t * std::cos(theta), 0.0));
  const double exact = bessel_j(BesselIndex(lambda), arg);
  const double st = std::abs(s * t);
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double scale;
    if (n == 0) {
      scale = 1.0;
    } else {
      if (st == 0.0) break;
      const double c = series_coefficient(lambda, n);
      scale = std::exp(n * std::log(st) + 2.0 * std::log(c)) * ((s * t < 0.0 && n % 2) ? -1.0 : 1.0);
    }
    sum += reproducing_coefficient(lambda, n) * scale * bessel_j(BesselIndex(n + lambda), s) *
           bessel_j(BesselIndex(n + lambda), t) * gegenbauer({n, lambda}, std::cos(theta));
  }
  return std::abs(exact - sum);
}

double expansion_residual(double lambda, double r, double t, int n_max) {
  if (!(lambda >= 0.0)) throw DomainError("expansion_residual: lambda must be nonnegative");
  cplx sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    double log_c = -boost::math::lgamma(n + 1.0);
    if (n > 0) {
      if (r == 0.0) break;
      log_c += n * std::log(std::abs(r) / 2.0) +
               (lambda == 0.0 ? std::log(2.0)
                              : log_pochhammer(2.0 * lambda, n) - log_pochhammer(lambda, n));
    }
    const double sign = (r < 0.0 && n % 2) ? -1.0 : 1.0;
    sum += sign * std::exp(log_c) * i_pow(n) * bessel_j(BesselIndex(n + lambda), r) *
           gegenbauer({n, lambda}, t);
  }
  return std::abs(std::exp(cplx(0.0, r * t)) - sum);
}

OrbitIntegral orbit_integral_routes(const MultiplicityVector& k, const Point& x, const Point& z,
                                    double r, const SphereQuadrature& rule, double tol, int nodes) {
  require_plane(k, "orbit_integral_I");
  const double lambda = k.lambda();
  const BesselIndex jl(lambda);

  cplx sphere = 0.0;
  const ComplexPoint ix{cplx(0.0, x[0]), cplx(0.0, x[1])};
  const ComplexPoint miz{cplx(0.0, -z[0]), cplx(0.0, -z[1])};
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const ComplexPoint xi{r * rule.nodes[i][0], r * rule.nodes[i][1]};
    sphere += rule.normalized[i] * dunkl_kernel(k, ix, xi) * dunkl_kernel(k, miz, xi);
  }

  const double xx = x[0] * x[0] + x[1] * x[1], zz = z[0] * z[0] + z[1] * z[1];
  double inter = 0.0;
  const auto mu1 = intertwiner_measure_1d(k[0], z[0], nodes);
  const auto mu2 = intertwiner_measure_1d(k[1], z[1], nodes);
  mu1.data().for_each_mass([&](double e1, double w1) {
    mu2.data().for_each_mass([&](double e2, double w2) {
      const double v = std::max(xx + zz - 2.0 * (x[0] * e1 + x[1] * e2), 0.0);
      inter += w1 * w2 * bessel_j(jl, r * std::sqrt(v));
    });
  });

  const double diff = std::max(std::abs(sphere.real() - inter), std::abs(sphere.imag()));
  if (diff > tol)
    throw ConsistencyError("orbit_integral_I: sphere and intertwiner evaluations disagree by " +
                           std::to_string(diff));
  return {sphere.real(), inter};
}

double orbit_integral_I(const MultiplicityVector& k, const Point& x, const Point& z, double r,
                        const SphereQuadrature& rule) {
  return orbit_integral_routes(k, x, z, r, rule).sphere;
}

}  // namespace dunkl
