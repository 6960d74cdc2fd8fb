#include "dunkl/transform_mean.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rank_one.hpp"

namespace dunkl {
namespace {

constexpr double kGaussTail = 40.0;  // e^{-40} ~ 4e-18

double log_c1(double k) {
  return (2.0 * k + 0.5) * std::numbers::ln2 + boost::math::lgamma(k + 0.5);
}

double w1(double k, double x) {
  return k == 0.0 ? 1.0 : std::pow(std::numbers::sqrt2 * std::abs(x), 2.0 * k);
}

// Contracts axis d of `in` (shape dims) with matrix m (rows x dims[d]), row-major.
std::vector<cplx> apply_axis(const std::vector<cplx>& in, const std::vector<std::size_t>& dims,
                             std::size_t d, const std::vector<cplx>& m, std::size_t rows) {
  std::size_t outer = 1, inner = 1;
  for (std::size_t i = 0; i < d; ++i) outer *= dims[i];
  for (std::size_t i = d + 1; i < dims.size(); ++i) inner *= dims[i];
  const std::size_t n = dims[d];
  std::vector<cplx> out(outer * rows * inner, 0.0);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        const cplx c = m[r * n + j];
        if (c == 0.0) continue;
        const cplx* src = &in[(o * n + j) * inner];
        cplx* dst = &out[(o * rows + r) * inner];
        for (std::size_t q = 0; q < inner; ++q) dst[q] += c * src[q];
      }
  return out;
}

GridFunction transform_impl(const MultiplicityVector& k, const GridFunction& f,
                            const std::vector<GridAxis>& out_axes, double sign, double decay_tol) {
  if (f.dim() != k.dim() || out_axes.size() != k.dim())
    throw DomainError("dunkl_transform: dimension mismatch");
  double peak = 0.0;
  for (const cplx& v : f.values()) peak = std::max(peak, std::abs(v));
  if (f.boundary_max() > decay_tol * std::max(1.0, peak))
    throw DomainError("dunkl_transform: input does not decay at the box boundary");
  std::vector<cplx> data = f.values();
  std::vector<std::size_t> dims;
  for (const GridAxis& a : f.axes()) dims.push_back(a.size());
  for (std::size_t d = 0; d < k.dim(); ++d) {
    const GridAxis& in = f.axes()[d];
    const GridAxis& out = out_axes[d];
    const RankOneMultiplicity kd(k[d]);
    const double inv_c = std::exp(-log_c1(k[d]));
    std::vector<cplx> m(out.size() * in.size());
    for (std::size_t r = 0; r < out.size(); ++r)
      for (std::size_t j = 0; j < in.size(); ++j)
        m[r * in.size() + j] = inv_c * in.weights[j] * w1(k[d], in.nodes[j]) *
                               dunkl_kernel_rank1(kd, cplx(0.0, sign * out.nodes[r]), in.nodes[j]);
    data = apply_axis(data, dims, d, m, out.size());
    dims[d] = out.size();
  }
  return GridFunction(out_axes, std::move(data));
}

double log_heat1(double k, double s, double x, double y) {
  return -(k + 0.5) * std::log(2.0 * s) - log_c1(k) - (x * x + y * y) / (4.0 * s) +
         log_dunkl_kernel_rank1(RankOneMultiplicity(k), x * y / (2.0 * s));
}

// c^{-2} int e^{-s xi^2} prod_j E(i a_j xi) w(xi) dxi for one coordinate.
double spectral1(double k, double s, const std::vector<double>& a, int nodes) {
  const RankOneMultiplicity kk(k);
  const GridAxis axis = dunkl_axis(k, std::sqrt(kGaussTail / s), nodes);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    const double xi = axis.nodes[i];
    cplx prod = std::exp(-s * xi * xi) * w1(k, xi) * axis.weights[i];
    for (double aj : a) prod *= dunkl_kernel_rank1(kk, cplx(0.0, aj), xi);
    acc += prod;
  }
  return acc.real() * std::exp(-2.0 * log_c1(k));
}

double norm_sq(const Point& x) {
  double r = 0.0;
  for (double v : x) r += v * v;
  return r;
}

void check_point(const MultiplicityVector& k, const Point& x, const char* what) {
  if (x.size() != k.dim()) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace

std::vector<GridAxis> dunkl_grid(const MultiplicityVector& k, double R, int half_nodes) {
  std::vector<GridAxis> axes;
  for (double ki : k.values()) axes.push_back(dunkl_axis(ki, R, half_nodes));
  return axes;
}

GridFunction dunkl_transform(const MultiplicityVector& k, const GridFunction& f,
                             const std::vector<GridAxis>* frequency_axes, double decay_tol) {
  return transform_impl(k, f, frequency_axes ? *frequency_axes : f.axes(), -1.0, decay_tol);
}

GridFunction inverse_dunkl_transform(const MultiplicityVector& k, const GridFunction& f,
                                     const std::vector<GridAxis>* space_axes, double decay_tol) {
  return transform_impl(k, f, space_axes ? *space_axes : f.axes(), 1.0, decay_tol);
}

double weighted_norm_sq(const MultiplicityVector& k, const GridFunction& f) {
  if (f.dim() != k.dim()) throw DomainError("weighted_norm_sq: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    acc += std::norm(f.values()[i]) * f.cell_weight(i) * weight(k, f.point(i));
  return acc;
}

double heat_kernel(const MultiplicityVector& k, double s, const Point& x, const Point& y) {
  if (!(s > 0.0)) throw DomainError("heat_kernel: s must be positive");
  check_point(k, x, "heat_kernel");
  check_point(k, y, "heat_kernel");
  double log_g = 0.0;
  for (std::size_t i = 0; i < k.dim(); ++i) log_g += log_heat1(k[i], s, x[i], y[i]);
  return std::exp(log_g);
}

double heat_kernel_spectral(const MultiplicityVector& k, double s, const Point& x, const Point& y,
                            int nodes) {
  if (!(s > 0.0)) throw DomainError("heat_kernel_spectral: s must be positive");
  check_point(k, x, "heat_kernel_spectral");
  check_point(k, y, "heat_kernel_spectral");
  double g = 1.0;
  for (std::size_t i = 0; i < k.dim(); ++i) g *= spectral1(k[i], s, {-x[i], y[i]}, nodes);
  return g;
}

double translated_heat_kernel(const MultiplicityVector& k, double s, const Point& x,
                              const Point& y, const Point& z, int nodes) {
  if (!(s > 0.0)) throw DomainError("translated_heat_kernel: s must be positive");
  check_point(k, x, "translated_heat_kernel");
  check_point(k, y, "translated_heat_kernel");
  check_point(k, z, "translated_heat_kernel");
  double g = 1.0;
  for (std::size_t i = 0; i < k.dim(); ++i) g *= spectral1(k[i], s, {x[i], y[i], -z[i]}, nodes);
  return g;
}

HeatNormalization translated_heat_normalization(const MultiplicityVector& k, double s,
                                                const Point& x, const Point& y, int nodes) {
  if (!(s > 0.0)) throw DomainError("translated_heat_normalization: s must be positive");
  check_point(k, x, "translated_heat_normalization");
  check_point(k, y, "translated_heat_normalization");
  double total = 1.0;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const double Z = std::abs(x[i]) + std::abs(y[i]) + 2.0 * std::sqrt(kGaussTail * s);
    const GridAxis zaxis = dunkl_axis(k[i], Z, nodes);
    double acc = 0.0;
    for (std::size_t j = 0; j < zaxis.size(); ++j) {
      const double z = zaxis.nodes[j];
      acc += spectral1(k[i], s, {x[i], y[i], -z}, nodes) * w1(k[i], z) * zaxis.weights[j];
    }
    total *= acc;
  }
  return {total, static_cast<double>(k.dim()) * std::exp(-kGaussTail)};
}

double heat_chapman_kolmogorov(const MultiplicityVector& k, double s, double t, const Point& x,
                               const Point& y, int nodes) {
  if (!(s > 0.0) || !(t > 0.0)) throw DomainError("heat_chapman_kolmogorov: times must be positive");
  check_point(k, x, "heat_chapman_kolmogorov");
  check_point(k, y, "heat_chapman_kolmogorov");
  double total = 1.0;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const double Z = std::max(std::abs(x[i]), std::abs(y[i])) + 2.0 * std::sqrt(kGaussTail * (s + t));
    const GridAxis zaxis = dunkl_axis(k[i], Z, nodes);
    double acc = 0.0;
    for (std::size_t j = 0; j < zaxis.size(); ++j) {
      const double z = zaxis.nodes[j];
      acc += std::exp(log_heat1(k[i], s, x[i], z) + log_heat1(k[i], t, z, y[i])) * w1(k[i], z) *
             zaxis.weights[j];
    }
    total *= acc;
  }
  return total;
}

double radial_translate(const MultiplicityVector& k, const std::function<double(double)>& profile,
                        const Point& x, const Point& y, int nodes) {
  check_point(k, x, "radial_translate");
  check_point(k, y, "radial_translate");
  const std::size_t n = k.dim();
  std::vector<std::vector<Atom>> factors(n);
  for (std::size_t i = 0; i < n; ++i) {
    intertwiner_measure_1d(k[i], y[i], nodes).data().for_each_mass([&](double e, double w) {
      if (w != 0.0) factors[i].push_back({e, w});
    });
  }
  const double base = norm_sq(x) + norm_sq(y);
  double acc = 0.0;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    double w = 1.0, dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w *= factors[i][idx[i]].weight;
      dot += x[i] * factors[i][idx[i]].point;
    }
    acc += w * profile(std::sqrt(std::max(base + 2.0 * dot, 0.0)));
    std::size_t d = n;
    while (d-- > 0) {
      if (++idx[d] < factors[d].size()) break;
      idx[d] = 0;
    }
    if (d == static_cast<std::size_t>(-1)) break;
  }
  return acc;
}

WeightedSphereRule orthant_rule(const MultiplicityVector& k, int nodes) {
  const std::size_t n = k.dim();
  WeightedSphereRule rule;
  // (y_1^2, ..., y_N^2) ~ Dirichlet(k_i + 1/2), sampled by stick breaking with Beta rules.
  struct Partial {
    Point squares;
    double remaining;
    double weight;
  };
  std::vector<Partial> level{{{}, 1.0, 1.0}};
  double tail = 0.0;
  for (double ki : k.values()) tail += ki + 0.5;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double p = k[i] + 0.5;
    tail -= p;
    const QuadratureRule& beta = gauss_jacobi(nodes, tail - 1.0, p - 1.0);
    double mu0 = 0.0;
    for (double w : beta.weights) mu0 += w;
    std::vector<Partial> next;
    for (const Partial& part : level) {
      for (std::size_t j = 0; j < beta.size(); ++j) {
        const double b = 0.5 * (1.0 + beta.nodes[j]);
        Partial q = part;
        q.squares.push_back(part.remaining * b);
        q.remaining = part.remaining * (1.0 - b);
        q.weight = part.weight * beta.weights[j] / mu0;
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  for (Partial& part : level) {
    part.squares.push_back(part.remaining);
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = std::sqrt(std::max(part.squares[i], 0.0));
    rule.nodes.push_back(std::move(y));
    rule.weights.push_back(part.weight);
  }
  return rule;
}

WeightedSphereRule weighted_sphere_rule(const MultiplicityVector& k, int nodes) {
  const WeightedSphereRule orthant = orthant_rule(k, nodes);
  const auto group = group_elements(k.dim());
  WeightedSphereRule rule;
  const double share = 1.0 / static_cast<double>(group.size());
  for (std::size_t i = 0; i < orthant.nodes.size(); ++i)
    for (const GroupElement& g : group) {
      rule.nodes.push_back(g.apply(orthant.nodes[i]));
      rule.weights.push_back(orthant.weights[i] * share);
    }
  return rule;
}

SphericalMeanMeasure::SphericalMeanMeasure(std::size_t dim, std::vector<double> points,
                                           std::vector<double> weights)
    : dim_(dim), points_(std::move(points)), weights_(std::move(weights)) {
  if (dim_ == 0 || points_.size() != dim_ * weights_.size())
    throw DomainError("spherical mean measure: inconsistent point layout");
}

Point SphericalMeanMeasure::point(std::size_t i) const {
  return Point(points_.begin() + static_cast<long>(i * dim_),
               points_.begin() + static_cast<long>((i + 1) * dim_));
}

double SphericalMeanMeasure::mass() const {
  double m = 0.0;
  for (double w : weights_) m += w;
  return m;
}

double SphericalMeanMeasure::min_weight() const {
  double m = INFINITY;
  for (double w : weights_) m = std::min(m, w);
  return m;
}

double SphericalMeanMeasure::integrate(const ScalarField& f) const {
  double acc = 0.0;
  Point p(dim_);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    std::copy_n(points_.begin() + static_cast<long>(i * dim_), dim_, p.begin());
    acc += weights_[i] * f(p);
  }
  return acc;
}

cplx SphericalMeanMeasure::integrate_complex(const std::function<cplx(const Point&)>& f) const {
  cplx acc = 0.0;
  Point p(dim_);
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    std::copy_n(points_.begin() + static_cast<long>(i * dim_), dim_, p.begin());
    acc += weights_[i] * f(p);
  }
  return acc;
}

std::pair<double, double> SphericalMeanMeasure::radial_extent() const {
  double lo = INFINITY, hi = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0.0) continue;
    double r = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) r += points_[i * dim_ + d] * points_[i * dim_ + d];
    r = std::sqrt(r);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

SphericalMeanMeasure sigma_measure(const MultiplicityVector& k, const Point& x, double t,
                                   const MeanOptions& options) {
  check_point(k, x, "sigma_measure");
  if (t < 0.0) throw DomainError("sigma_measure: t must be >= 0");
  const std::size_t n = k.dim();
  if (t == 0.0) return SphericalMeanMeasure(n, x, {1.0});
  std::vector<double> points, weights;
  const WeightedSphereRule sphere = orthant_rule(k, options.sphere_nodes);
  for (std::size_t s = 0; s < sphere.nodes.size(); ++s) {
    std::vector<std::vector<Atom>> factors(n);
    for (std::size_t i = 0; i < n; ++i) {
      sigma_measure_rank1(RankOneMultiplicity(k[i]), x[i], t * sphere.nodes[s][i],
                          options.line_nodes, 0)
          .data()
          .for_each_mass([&](double z, double w) {
            if (w < -1e-12) throw NumericalError("sigma_measure: negative mass in a rank-one factor");
            if (w > 0.0) factors[i].push_back({z, w});
          });
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      double w = sphere.weights[s];
      for (std::size_t i = 0; i < n; ++i) {
        w *= factors[i][idx[i]].weight;
        points.push_back(factors[i][idx[i]].point);
      }
      weights.push_back(w);
      std::size_t d = n;
      while (d-- > 0) {
        if (++idx[d] < factors[d].size()) break;
        idx[d] = 0;
      }
      if (d == static_cast<std::size_t>(-1)) break;
    }
  }
  return SphericalMeanMeasure(n, std::move(points), std::move(weights));
}

double spherical_mean(const MultiplicityVector& k, const ScalarField& f, const Point& x, double t,
                      const MeanOptions& options) {
  if (t == 0.0) return f(x);
  return sigma_measure(k, x, t, options).integrate(f);
}

double spherical_mean_radial(const MultiplicityVector& k,
                             const std::function<double(double)>& profile, const Point& x,
                             double t, int sphere_nodes, int nodes) {
  check_point(k, x, "spherical_mean_radial");
  if (t < 0.0) throw DomainError("spherical_mean_radial: t must be >= 0");
  const WeightedSphereRule sphere = weighted_sphere_rule(k, sphere_nodes);
  double acc = 0.0;
  for (std::size_t s = 0; s < sphere.nodes.size(); ++s) {
    Point y = sphere.nodes[s];
    for (double& v : y) v *= t;
    acc += sphere.weights[s] * radial_translate(k, profile, x, y, nodes);
  }
  return acc;
}

cplx spherical_mean_spectral(const MultiplicityVector& k, const GridFunction& f_hat,
                             const Point& x, double t) {
  check_point(k, x, "spherical_mean_spectral");
  if (f_hat.dim() != k.dim()) throw DomainError("spherical_mean_spectral: dimension mismatch");
  const BesselIndex jl(k.lambda());
  const double inv_c = 1.0 / constants(k).c_k;
  const ComplexPoint xc = to_complex(x);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < f_hat.size(); ++i) {
    const Point xi = f_hat.point(i);
    ComplexPoint ixi(xi.size());
    for (std::size_t d = 0; d < xi.size(); ++d) ixi[d] = cplx(0.0, xi[d]);
    acc += f_hat.values()[i] * dunkl_kernel(k, xc, ixi) * bessel_j(jl, t * std::sqrt(norm_sq(xi))) *
           weight(k, xi) * f_hat.cell_weight(i);
  }
  return acc * inv_c;
}

SupportReport sigma_support_check(const MultiplicityVector& k, const Point& x, double t, int trials,
                                  std::uint64_t seed, const MeanOptions& options) {
  check_point(k, x, "sigma_support_check");
  const std::size_t n = k.dim();
  const SphericalMeanMeasure sigma = sigma_measure(k, x, t, options);
  const auto group = group_elements(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double rx = std::sqrt(norm_sq(x));
  const double hole = std::abs(rx - t);
  const double box = rx + t + 1.0;
  double worst = 0.0;
  int done = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Point c(n);
    double rho = 0.0;
    const bool inner = (trial % 2 == 1) && hole > 0.05;
    if (inner) {
      // Bump inside the hole {|xi| < ||x| - t|}.
      for (int attempt = 0; attempt < 1000; ++attempt) {
        for (double& v : c) v = (2.0 * unit(rng) - 1.0) * hole;
        const double rc = std::sqrt(norm_sq(c));
        if (rc < hole * 0.95) {
          rho = (hole - rc) * (0.5 + 0.48 * unit(rng));
          break;
        }
      }
    } else {
      // Bump outside the union of the balls B(gx, t).
      for (int attempt = 0; attempt < 1000; ++attempt) {
        for (double& v : c) v = (2.0 * unit(rng) - 1.0) * box;
        double dist = INFINITY;
        for (const GroupElement& g : group) {
          const Point gx = g.apply(x);
          double d2 = 0.0;
          for (std::size_t i = 0; i < n; ++i) d2 += (c[i] - gx[i]) * (c[i] - gx[i]);
          dist = std::min(dist, std::sqrt(d2));
        }
        if (dist - t > 0.05) {
          rho = (dist - t) * (0.5 + 0.48 * unit(rng));
          break;
        }
      }
    }
    if (!(rho > 0.0)) continue;
    const auto bump = [&](const Point& p) {
      double d2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) d2 += (p[i] - c[i]) * (p[i] - c[i]);
      const double q = d2 / (rho * rho);
      return q < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - q)) : 0.0;
    };
    worst = std::max(worst, sigma.integrate(bump));
    ++done;
  }
  return {worst <= 1e-8, worst, done};
}

double darboux_residual(const MultiplicityVector& k, const ScalarField& f, const Point& x, double t,
                        double h, const MeanOptions& options) {
  if (!(h > 0.0) || !(t > h)) throw DomainError("darboux_residual: requires 0 < h < t");
  auto u = [&](const Point& p, double tau) { return spherical_mean(k, f, p, tau, options); };
  const double spatial = dunkl_laplacian(k, [&](const Point& p) { return u(p, t); }, x, h);
  const double um = u(x, t - h), u0 = u(x, t), up = u(x, t + h);
  const double utt = (up - 2.0 * u0 + um) / (h * h);
  const double ut = (up - um) / (2.0 * h);
  return std::abs(spatial - utt - (2.0 * k.lambda() + 1.0) / t * ut);
}

double initial_velocity(const MultiplicityVector& k, const ScalarField& f, const Point& x, double h,
                        const MeanOptions& options) {
  if (!(h > 0.0)) throw DomainError("initial_velocity: h must be positive");
  const double u0 = f(x);
  const double u1 = spherical_mean(k, f, x, h, options);
  const double u2 = spherical_mean(k, f, x, 2.0 * h, options);
  return (-3.0 * u0 + 4.0 * u1 - u2) / (2.0 * h);
}

}  // namespace dunkl
