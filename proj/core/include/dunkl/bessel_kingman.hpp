#pragma once

#include <functional>
#include <vector>

#include "dunkl/measures.hpp"

namespace dunkl {

/// Index of the Bessel-Kingman hypergroup on R_+. Rank-one callers use
/// lambda = k - 1/2, so the admissible range is lambda >= -1/2.
class HypergroupIndex {
 public:
  explicit HypergroupIndex(double lambda);
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Kernel m_a(x, y, z) of the product formula for j_a; zero off
/// [|x-y|, x+y]. Requires a > -1/2 and x, y > 0.
double product_kernel_m(double alpha, double x, double y, double z);

/// Quadrature form of the probability measure nu_{x,y}: (node, mass) pairs.
///
/// Under u = z^2 the density of nu_{x,y} becomes the symmetric Jacobi weight
/// (1-s^2)^{a-1/2} in s = (z^2 - x^2 - y^2) / (2xy), so a Gauss-Jacobi rule
/// in s integrates j_a(.z) exactly up to rounding for moderate n.
std::vector<Atom> product_measure_rule(double alpha, double x, double y, int nodes = 48);

/// nu_{x,y} = delta_x o delta_y as a RadialProfileMeasure.
RadialProfileMeasure convolve_points(HypergroupIndex idx, double x, double y, int nodes = 48);

struct ConvolveOptions {
  /// Inputs with more masses than this are binned (mass and mean preserving).
  std::size_t max_atoms = 512;
  /// Quadrature nodes used for every nu_{x,y}.
  int nodes = 24;
  /// 0 keeps the exact atom cloud; otherwise the result is accumulated on
  /// this many equal-width output bins.
  std::size_t output_bins = 0;
};

/// Bilinear extension of delta_x o delta_y to finite measures.
RadialProfileMeasure convolve_measures(HypergroupIndex idx, const RadialProfileMeasure& sigma,
                                       const RadialProfileMeasure& tau,
                                       const ConvolveOptions& options = {});

/// Density (w.r.t. dz) of sigma o tau at z > 0 for two measures given by
/// densities f, g supported in [0, p_max / 2]. Uses the separable form of
/// the kernel in p = r + s, q = r - s.
double convolution_density(HypergroupIndex idx, const std::function<double(double)>& f,
                           const std::function<double(double)>& g, double z, double p_max,
                           int p_nodes = 96, int q_nodes = 64);

/// H(sigma)(r) = int j_lambda(r t) dsigma(t).
double hankel_transform(HypergroupIndex idx, const RadialProfileMeasure& sigma, double r);

double rayleigh_density(double lambda, double t, double r);
double rayleigh_cdf(double lambda, double t, double r);

/// Rayleigh convolution semigroup sigma_t; Hankel image exp(-t r^2).
/// Nodes come from a generalized Gauss-Laguerre rule in v = r^2 / 4t.
RadialProfileMeasure rayleigh_semigroup(HypergroupIndex idx, double t, int nodes = 64);

/// Density of the one-sided 1/2-stable law at time t:
///   t exp(-t^2 / 4s) / (2 sqrt(pi) s^{3/2}),  Laplace transform exp(-t sqrt(u)).
double stable_half_density(double t, double s);

/// Discretized 1/2-stable subordinator rho_t as atoms on s > 0
/// (trapezoid rule in log(t^2 / 4s), `nodes` points).
RadialProfileMeasure stable_half_subordinator(double t, int nodes = 256);

/// Mixture int base(s) drho(s).
RadialProfileMeasure subordinate(HypergroupIndex idx,
                                 const std::function<RadialProfileMeasure(double)>& base,
                                 const RadialProfileMeasure& rho);

/// Rayleigh semigroup subordinated by the 1/2-stable law; Hankel image exp(-t r).
RadialProfileMeasure cauchy_semigroup(HypergroupIndex idx, double t, int s_nodes = 256,
                                      int r_nodes = 48);

/// Distribution function of the radial part of the Cauchy semigroup.
double cauchy_cdf(double lambda, double t, double r, int s_nodes = 256);

}  // namespace dunkl
