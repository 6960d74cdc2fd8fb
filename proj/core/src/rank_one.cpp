#include "dunkl/rank_one.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "dunkl/bessel_kingman.hpp"
#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

double sigma3(double a, double b, double c) { return (a * a + b * b - c * c) / (2.0 * a * b); }

// (1 - s_{x,y,z} + s_{z,x,y} + s_{z,y,x}) / 2 for nonzero x, y, z.
double product_coefficient(double x, double y, double z) {
  return 0.5 * (1.0 - sigma3(x, y, z) + sigma3(z, x, y) + sigma3(z, y, x));
}

SignedLineMeasure atoms_only(std::vector<Atom> atoms, bool probability) {
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.point < b.point; });
  return SignedLineMeasure(MeasureData({}, {}, {}, std::move(atoms)), probability);
}

// Symmetric +-z layout of a radial rule, with node masses coeff(z) * w.
template <class Coeff>
SignedLineMeasure mirrored(double alpha, double ax, double ay, int nodes, Coeff coeff,
                           bool probability) {
  const auto rule = product_measure_rule(alpha, ax, ay, nodes);
  const std::size_t n = rule.size();
  std::vector<double> grid(2 * n), density(2 * n), weights(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = rule[i].point;
    const double base = product_kernel_m(alpha, ax, ay, z) * std::pow(z, 2.0 * alpha + 1.0);
    const double q = rule[i].weight / base;
    grid[n - 1 - i] = -z;
    density[n - 1 - i] = base * coeff(-z);
    weights[n - 1 - i] = q;
    grid[n + i] = z;
    density[n + i] = base * coeff(z);
    weights[n + i] = q;
  }
  return SignedLineMeasure(MeasureData(std::move(grid), std::move(density), std::move(weights), {}),
                           probability);
}

}  // namespace

RankOneMultiplicity::RankOneMultiplicity(double k) : k_(k) {
  if (!(k >= 0.0)) throw DomainError("rank-one multiplicity must be >= 0");
}

cplx dunkl_kernel_rank1(RankOneMultiplicity k, cplx z, cplx w) {
  const double kv = k.value();
  const cplx u = z * w;
  const cplx iu(-u.imag(), u.real());
  return bessel_j(BesselIndex(kv - 0.5), iu) +
         u / (2.0 * kv + 1.0) * bessel_j(BesselIndex(kv + 0.5), iu);
}

double log_dunkl_kernel_rank1(RankOneMultiplicity k, double u) {
  const double kv = k.value();
  const double z = std::abs(u);
  if (kv == 0.0) return u;
  if (z < 300.0) return std::log(dunkl_kernel_rank1(k, u, 1.0).real());
  // E_k(u) = Gamma(k+1/2) (z/2)^{1/2-k} (I_{k-1/2}(z) + sign(u) I_{k+1/2}(z)), with
  // e^{-z} I_nu(z) ~ (2 pi z)^{-1/2} sum_m (-1)^m prod_{j<=m} (4nu^2 - (2j-1)^2) / (m! (8z)^m).
  const double sign = u < 0.0 ? -1.0 : 1.0;
  const double mu1 = 4.0 * (kv - 0.5) * (kv - 0.5), mu2 = 4.0 * (kv + 0.5) * (kv + 0.5);
  double t1 = 1.0, t2 = 1.0, sum = 1.0 + sign;
  for (int m = 1; m < 60; ++m) {
    const double odd = (2.0 * m - 1.0) * (2.0 * m - 1.0);
    t1 *= -(mu1 - odd) / (m * 8.0 * z);
    t2 *= -(mu2 - odd) / (m * 8.0 * z);
    const double term = t1 + sign * t2;
    sum += term;
    if (std::abs(t1) + std::abs(t2) < 1e-17 * std::abs(sum)) break;
  }
  if (!(sum > 0.0)) throw NumericalError("log_dunkl_kernel_rank1: asymptotic expansion failed");
  return std::lgamma(kv + 0.5) + (0.5 - kv) * std::log(0.5 * z) + z -
         0.5 * std::log(2.0 * M_PI * z) + std::log(sum);
}

double signed_product_density(RankOneMultiplicity k, double x, double y, double z) {
  const double kv = k.value();
  if (!(kv > 0.0)) throw DomainError("signed_product_density: requires k > 0");
  if (x == 0.0 || y == 0.0) throw DomainError("signed_product_density: requires x, y != 0");
  const double az = std::abs(z);
  const double ax = std::abs(x), ay = std::abs(y);
  if (az == 0.0 || az < std::abs(ax - ay) || az > ax + ay) return 0.0;
  return product_kernel_m(kv - 0.5, ax, ay, az) * std::pow(az, 2.0 * kv) *
         product_coefficient(x, y, z);
}

SignedLineMeasure signed_product_measure(RankOneMultiplicity k, double x, double y, int nodes) {
  const double kv = k.value();
  if (x == 0.0) return SignedLineMeasure::point_mass(y);
  if (y == 0.0) return SignedLineMeasure::point_mass(x);
  if (kv == 0.0) return SignedLineMeasure::point_mass(x + y);
  return mirrored(
      kv - 0.5, std::abs(x), std::abs(y), nodes,
      [&](double z) { return product_coefficient(x, y, z); }, false);
}

SignedLineMeasure convolve_rank1(RankOneMultiplicity k, const SignedLineMeasure& mu,
                                 const SignedLineMeasure& nu,
                                 const RankOneConvolveOptions& options) {
  const auto left = compress_masses(mu.data(), options.max_atoms);
  const auto right = compress_masses(nu.data(), options.max_atoms);
  std::vector<Atom> cloud;
  for (const Atom& a : left) {
    for (const Atom& b : right) {
      signed_product_measure(k, a.point, b.point, options.nodes)
          .data()
          .for_each_mass([&](double z, double w) { cloud.push_back({z, a.weight * b.weight * w}); });
    }
  }
  const bool prob = k.value() == 0.0 && mu.is_probability() && nu.is_probability();
  return atoms_only(std::move(cloud), prob);
}

cplx dunkl_transform_measure_rank1(RankOneMultiplicity k, const SignedLineMeasure& mu, double z) {
  cplx acc = 0.0;
  mu.data().for_each_mass(
      [&](double xi, double w) { acc += w * dunkl_kernel_rank1(k, cplx(0.0, xi), z); });
  return acc;
}

double sigma_density_rank1(RankOneMultiplicity k, double x, double t, double z) {
  const double kv = k.value();
  if (!(kv > 0.0)) throw DomainError("sigma_density_rank1: requires k > 0");
  if (x == 0.0 || !(t > 0.0)) throw DomainError("sigma_density_rank1: requires x != 0, t > 0");
  const double az = std::abs(z), ax = std::abs(x);
  if (az == 0.0 || az < std::abs(ax - t) || az > ax + t) return 0.0;
  return product_kernel_m(kv - 0.5, ax, t, az) * std::pow(az, 2.0 * kv) * 0.5 *
         (1.0 + sigma3(z, x, t));
}

SignedLineMeasure sigma_measure_rank1(RankOneMultiplicity k, double x, double t, int nodes,
                                      int scan_points) {
  const double kv = k.value();
  if (t < 0.0) throw DomainError("sigma_measure_rank1: t must be >= 0");
  if (t == 0.0) return SignedLineMeasure::point_mass(x);
  if (x == 0.0) return atoms_only({{-t, 0.5}, {t, 0.5}}, true);
  if (kv == 0.0) return atoms_only({{x - t, 0.5}, {x + t, 0.5}}, true);

  const double ax = std::abs(x);
  const double lo = std::abs(ax - t), hi = ax + t;
  for (int i = 1; i <= scan_points; ++i) {
    const double z = lo + (hi - lo) * i / (scan_points + 1.0);
    for (double zz : {z, -z}) {
      if (sigma_density_rank1(k, x, t, zz) < -1e-9)
        throw NumericalError("sigma_measure_rank1: negative density encountered");
    }
  }
  return mirrored(
      kv - 0.5, ax, t, nodes, [&](double z) { return 0.5 * (1.0 + sigma3(z, x, t)); }, true);
}

double sigma_interval_mass_rank1(RankOneMultiplicity k, double x, double t, double a, double b,
                                 int nodes) {
  if (b < a) std::swap(a, b);
  const double kv = k.value();
  if (t == 0.0 || x == 0.0 || kv == 0.0) {
    double acc = 0.0;
    sigma_measure_rank1(k, x, t).data().for_each_mass([&](double z, double w) {
      if (z >= a && z <= b) acc += w;
    });
    return acc;
  }
  const double ax = std::abs(x);
  const double lo = std::abs(ax - t), hi = ax + t;
  const double beta = kv - 1.0;
  const double norm = boost::math::beta(0.5, kv);
  auto s_of = [&](double z) {
    return std::clamp((z * z - ax * ax - t * t) / (2.0 * ax * t), -1.0, 1.0);
  };
  // sign = +1 for the component in (0, inf), -1 for its mirror image.
  auto component = [&](double zlo, double zhi, double sign) {
    zlo = std::max(zlo, lo);
    zhi = std::min(zhi, hi);
    if (!(zhi > zlo)) return 0.0;
    const double slo = s_of(zlo), shi = s_of(zhi);
    const bool left_end = zlo == lo, right_end = zhi == hi;
    auto f = [&](double s) {
      const double z = std::sqrt(std::max(ax * ax + t * t + 2.0 * ax * t * s, 0.0));
      double v = z > 0.0 ? 0.5 * (1.0 + sign * sigma3(z, x, t)) : 0.5;
      if (!left_end) v *= std::pow(1.0 + s, beta);
      if (!right_end) v *= std::pow(1.0 - s, beta);
      return v;
    };
    return integrate_jacobi(f, slo, shi, left_end ? beta : 0.0, right_end ? beta : 0.0, nodes) /
           norm;
  };
  return component(a, b, 1.0) + component(-b, -a, -1.0);
}

double spherical_mean_rank1(RankOneMultiplicity k, const std::function<double(double)>& f,
                            double x, double t, int nodes) {
  return sigma_measure_rank1(k, x, t, nodes).integrate(f);
}

}  // namespace dunkl
