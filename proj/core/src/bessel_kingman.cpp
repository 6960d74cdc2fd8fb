#include "dunkl/bessel_kingman.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/special_fn.hpp"

namespace dunkl {
namespace {

double kernel_constant(double alpha) {
  return std::exp((1.0 - 2.0 * alpha) * std::numbers::ln2 + boost::math::lgamma(alpha + 1.0) -
                  0.5 * std::log(std::numbers::pi) - boost::math::lgamma(alpha + 0.5));
}

MeasureData bin_onto_grid(const std::vector<Atom>& cloud, std::size_t bins) {
  if (bins < 2) throw DomainError("convolve_measures: output grid needs at least two bins");
  double hi = 0.0;
  for (const Atom& a : cloud) hi = std::max(hi, a.point);
  if (!(hi > 0.0)) return MeasureData({}, {}, {}, cloud);
  const double width = hi / static_cast<double>(bins - 1);
  std::vector<double> mass(bins, 0.0);
  for (const Atom& a : cloud) {
    auto b = static_cast<std::size_t>(std::lround(a.point / width));
    mass[std::min(b, bins - 1)] += a.weight;
  }
  std::vector<double> grid(bins), density(bins), weights(bins, width);
  for (std::size_t b = 0; b < bins; ++b) {
    grid[b] = b * width;
    density[b] = mass[b] / width;
  }
  return MeasureData(std::move(grid), std::move(density), std::move(weights), {});
}

}  // namespace

HypergroupIndex::HypergroupIndex(double lambda) : lambda_(lambda) {
  if (!(lambda >= -0.5)) throw DomainError("hypergroup index must satisfy lambda >= -1/2");
}

double product_kernel_m(double alpha, double x, double y, double z) {
  if (!(alpha > -0.5)) throw DomainError("product_kernel_m: alpha must exceed -1/2");
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("product_kernel_m: x and y must be positive");
  const double lo = std::abs(x - y), hi = x + y;
  if (z < lo || z > hi || z <= 0.0) return 0.0;
  const double heron = (z * z - (x - y) * (x - y)) * ((x + y) * (x + y) - z * z);
  const double c = kernel_constant(alpha);
  if (alpha == 0.5) return c / std::pow(x * y * z, 2.0 * alpha);
  return c * std::pow(heron, alpha - 0.5) / std::pow(x * y * z, 2.0 * alpha);
}

std::vector<Atom> product_measure_rule(double alpha, double x, double y, int nodes) {
  if (!(alpha >= -0.5)) throw DomainError("product measure: alpha must be >= -1/2");
  if (x < 0.0 || y < 0.0) throw DomainError("product measure: x, y must be nonnegative");
  if (x == 0.0) return {{y, 1.0}};
  if (y == 0.0) return {{x, 1.0}};
  if (alpha == -0.5) return {{std::abs(x - y), 0.5}, {x + y, 0.5}};
  const double beta = alpha - 0.5;
  const QuadratureRule& rule = gauss_jacobi(nodes, beta, beta);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  std::vector<Atom> out(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double z2 = x * x + y * y + 2.0 * x * y * rule.nodes[i];
    out[i] = {std::sqrt(std::max(z2, 0.0)), rule.weights[i] / total};
  }
  return out;
}

RadialProfileMeasure convolve_points(HypergroupIndex idx, double x, double y, int nodes) {
  const double alpha = idx.lambda();
  auto rule = product_measure_rule(alpha, x, y, nodes);
  if (x == 0.0 || y == 0.0 || alpha == -0.5)
    return RadialProfileMeasure(MeasureData({}, {}, {}, std::move(rule)), alpha, true);
  std::vector<double> grid, density, weights;
  for (const Atom& a : rule) {
    const double d = product_kernel_m(alpha, x, y, a.point) * std::pow(a.point, 2.0 * alpha + 1.0);
    grid.push_back(a.point);
    density.push_back(d);
    weights.push_back(a.weight / d);
  }
  return RadialProfileMeasure(MeasureData(std::move(grid), std::move(density), std::move(weights), {}),
                              alpha, true);
}

RadialProfileMeasure convolve_measures(HypergroupIndex idx, const RadialProfileMeasure& sigma,
                                       const RadialProfileMeasure& tau,
                                       const ConvolveOptions& options) {
  const double alpha = idx.lambda();
  const auto left = compress_masses(sigma.data(), options.max_atoms);
  const auto right = compress_masses(tau.data(), options.max_atoms);
  std::vector<Atom> cloud;
  cloud.reserve(left.size() * right.size() * static_cast<std::size_t>(options.nodes));
  for (const Atom& a : left) {
    for (const Atom& b : right) {
      for (const Atom& c : product_measure_rule(alpha, a.point, b.point, options.nodes))
        cloud.push_back({c.point, a.weight * b.weight * c.weight});
    }
  }
  std::sort(cloud.begin(), cloud.end(),
            [](const Atom& u, const Atom& v) { return u.point < v.point; });
  const bool prob = sigma.is_probability() && tau.is_probability();
  if (options.output_bins == 0)
    return RadialProfileMeasure(MeasureData({}, {}, {}, std::move(cloud)), alpha, prob);
  return RadialProfileMeasure(bin_onto_grid(cloud, options.output_bins), alpha, prob);
}

double convolution_density(HypergroupIndex idx, const std::function<double(double)>& f,
                           const std::function<double(double)>& g, double z, double p_max,
                           int p_nodes, int q_nodes) {
  const double alpha = idx.lambda();
  if (!(alpha > -0.5)) throw DomainError("convolution_density: needs lambda > -1/2");
  if (!(z > 0.0)) throw DomainError("convolution_density: z must be positive");
  if (!(p_max > z)) return 0.0;
  const double beta = alpha - 0.5;
  auto inner = [&](double p) {
    auto integrand = [&](double q) {
      const double r = 0.5 * (p + q), s = 0.5 * (p - q);
      return f(r) * g(s) / std::pow(r * s, 2.0 * alpha);
    };
    return integrate_jacobi(integrand, -z, z, beta, beta, q_nodes) * std::pow(p + z, beta);
  };
  const double outer = integrate_jacobi(inner, z, p_max, beta, 0.0, p_nodes);
  return kernel_constant(alpha) * 0.5 * z * outer;
}

double hankel_transform(HypergroupIndex idx, const RadialProfileMeasure& sigma, double r) {
  const BesselIndex index(std::max(idx.lambda(), -0.5));
  return sigma.integrate([&](double t) { return bessel_j(index, r * t); });
}

double rayleigh_density(double lambda, double t, double r) {
  if (r <= 0.0) return 0.0;
  return std::exp((2.0 * lambda + 1.0) * std::log(r) - r * r / (4.0 * t) -
                  (2.0 * lambda + 1.0) * std::numbers::ln2 - boost::math::lgamma(lambda + 1.0) -
                  (lambda + 1.0) * std::log(t));
}

double rayleigh_cdf(double lambda, double t, double r) {
  if (r <= 0.0) return 0.0;
  return boost::math::gamma_p(lambda + 1.0, r * r / (4.0 * t));
}

RadialProfileMeasure rayleigh_semigroup(HypergroupIndex idx, double t, int nodes) {
  const double lambda = idx.lambda();
  if (t < 0.0) throw DomainError("rayleigh_semigroup: t must be nonnegative");
  if (t == 0.0) return RadialProfileMeasure::point_mass(0.0, lambda);
  const QuadratureRule& rule = gauss_laguerre(nodes, lambda);
  const double norm = std::exp(-boost::math::lgamma(lambda + 1.0));
  std::vector<double> grid, density, weights;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double r = std::sqrt(4.0 * t * rule.nodes[i]);
    const double d = rayleigh_density(lambda, t, r);
    if (!(d > 0.0)) continue;
    grid.push_back(r);
    density.push_back(d);
    weights.push_back(rule.weights[i] * norm / d);
  }
  return RadialProfileMeasure(MeasureData(std::move(grid), std::move(density), std::move(weights), {}),
                              lambda, true);
}

double stable_half_density(double t, double s) {
  if (s <= 0.0) return 0.0;
  return t * std::exp(-t * t / (4.0 * s)) / (2.0 * std::sqrt(std::numbers::pi) * std::pow(s, 1.5));
}

RadialProfileMeasure stable_half_subordinator(double t, int nodes) {
  if (!(t > 0.0)) throw DomainError("stable_half_subordinator: t must be positive");
  if (nodes < 16) throw DomainError("stable_half_subordinator: need at least 16 nodes");
  // v = t^2 / 4s is Gamma(1/2, 1); trapezoid in y = log v.
  constexpr double y_lo = -50.0, y_hi = 4.0;
  const double h = (y_hi - y_lo) / (nodes - 1);
  std::vector<Atom> atoms;
  atoms.reserve(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double y = y_lo + j * h;
    const double v = std::exp(y);
    double w = h * std::exp(0.5 * y - v) / std::sqrt(std::numbers::pi);
    if (j == 0 || j == nodes - 1) w *= 0.5;
    atoms.push_back({t * t / (4.0 * v), w});
  }
  std::reverse(atoms.begin(), atoms.end());
  double total = 0.0;
  for (const Atom& a : atoms) total += a.weight;
  for (Atom& a : atoms) a.weight /= total;
  return RadialProfileMeasure(MeasureData({}, {}, {}, std::move(atoms)), -0.5, true);
}

RadialProfileMeasure subordinate(HypergroupIndex idx,
                                 const std::function<RadialProfileMeasure(double)>& base,
                                 const RadialProfileMeasure& rho) {
  std::vector<Atom> cloud;
  bool prob = rho.is_probability();
  rho.data().for_each_mass([&](double s, double w) {
    const RadialProfileMeasure m = base(s);
    prob = prob && m.is_probability();
    m.data().for_each_mass([&](double r, double v) { cloud.push_back({r, w * v}); });
  });
  std::sort(cloud.begin(), cloud.end(),
            [](const Atom& a, const Atom& b) { return a.point < b.point; });
  return RadialProfileMeasure(MeasureData({}, {}, {}, std::move(cloud)), idx.lambda(), prob);
}

RadialProfileMeasure cauchy_semigroup(HypergroupIndex idx, double t, int s_nodes, int r_nodes) {
  if (t == 0.0) return RadialProfileMeasure::point_mass(0.0, idx.lambda());
  return subordinate(
      idx, [&](double s) { return rayleigh_semigroup(idx, s, r_nodes); },
      stable_half_subordinator(t, s_nodes));
}

double cauchy_cdf(double lambda, double t, double r, int s_nodes) {
  const auto rho = stable_half_subordinator(t, s_nodes);
  return rho.integrate([&](double s) { return rayleigh_cdf(lambda, s, r); });
}

}  // namespace dunkl
