#pragma once

#include <functional>
#include <vector>

#include "dunkl/bessel_kingman.hpp"
#include "dunkl/dunkl_core.hpp"
#include "dunkl/transform_mean.hpp"

namespace dunkl {

/// Element of M_k^1 given by its radial profile p(mu) on R_+.
///
/// The profile must carry the hypergroup index lambda = gamma + N/2 - 1 of k.
/// An optional closed-form Hankel image replaces the quadrature of the profile
/// in radial_hat.
class KRadialMeasure {
 public:
  using HankelImage = std::function<double(double)>;
  using RadialDensity = std::function<double(double)>;

  KRadialMeasure(MultiplicityVector k, RadialProfileMeasure profile, HankelImage image = {},
                 RadialDensity density = {});

  static KRadialMeasure point_mass_at_origin(const MultiplicityVector& k);

  const MultiplicityVector& k() const noexcept { return k_; }
  const RadialProfileMeasure& profile() const noexcept { return profile_; }
  bool has_closed_form() const noexcept { return static_cast<bool>(image_); }
  /// Lebesgue density of p(mu), when known in closed form.
  const RadialDensity& density() const noexcept { return density_; }

  /// H^lambda(p(mu))(r).
  double hankel(double r) const;
  /// Same, always from the discretized profile.
  double hankel_from_profile(double r) const;

 private:
  MultiplicityVector k_;
  RadialProfileMeasure profile_;
  HankelImage image_;
  RadialDensity density_;
};

struct TranslateOptions {
  MeanOptions mean{12, 16};
  /// Profiles with more masses are merged into this many equal-mass bins before translation.
  std::size_t max_radial_atoms = 96;
};

/// (delta_x *_k mu)(f) = int M_f(x, r) dp(mu)(r).
double translate_measure(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                         const ScalarField& f, const TranslateOptions& options = {});

cplx translate_measure(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                       const std::function<cplx(const Point&)>& f,
                       const TranslateOptions& options = {});

/// (delta_x *_k mu)(A) for the box A = prod [lo_i, hi_i], from exact rank-one interval masses.
/// The radius is integrated adaptively against p(mu)'s density when one is known.
double translate_box_mass(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                          const Point& lo, const Point& hi, int sphere_nodes = 24);

/// mu^(xi) = H^lambda(p(mu))(|xi|).
double radial_hat(const MultiplicityVector& k, const KRadialMeasure& mu, const Point& xi);

/// p^{-1}(p(mu) o_lambda p(nu)).
KRadialMeasure convolve_k(const MultiplicityVector& k, const KRadialMeasure& mu,
                          const KRadialMeasure& nu, const ConvolveOptions& options = {});

/// t -> mu_t. Must return delta_0 at t = 0.
using RadialFamily = std::function<KRadialMeasure(double)>;

/// Rayleigh profiles; Hankel image exp(-t r^2).
RadialFamily gaussian_family(const MultiplicityVector& k, int nodes = 64);

/// Density of the radial part of the k-Cauchy law:
///   2 Gamma(lambda + 3/2) / (sqrt(pi) Gamma(lambda + 1)) t r^{2 lambda + 1} / (t^2 + r^2)^{lambda + 3/2}.
double cauchy_density(double lambda, double t, double r);

/// Rayleigh profiles subordinated by the 1/2-stable law; Hankel image exp(-t r),
/// composed as int exp(-s r^2) drho_t(s).
RadialFamily cauchy_family(const MultiplicityVector& k, int s_nodes = 256, int r_nodes = 48);

/// Rayleigh profiles subordinated by the gamma process with scale theta;
/// Hankel image (1 + theta r^2)^{-t}.
RadialFamily gamma_subordinated_family(const MultiplicityVector& k, double theta = 1.0, int s_nodes = 48,
                                       int r_nodes = 48);

/// P(x, .) = delta_x *_k mu.
class MarkovKernelHandle {
 public:
  MarkovKernelHandle(MultiplicityVector k, KRadialMeasure mu, TranslateOptions options = {});

  const MultiplicityVector& k() const noexcept { return k_; }
  const KRadialMeasure& generator() const noexcept { return mu_; }

  /// int f(xi) P(x, d xi).
  double operator()(const Point& x, const ScalarField& f) const;
  /// P(x, .)^(xi) = int E_k(-i xi, eta) P(x, d eta).
  cplx transform(const Point& x, const Point& xi) const;
  double box_mass(const Point& x, const Point& lo, const Point& hi) const;

 private:
  MultiplicityVector k_;
  KRadialMeasure mu_;
  TranslateOptions options_;
};

class Semigroup {
 public:
  Semigroup(MultiplicityVector k, RadialFamily family, TranslateOptions options);

  MarkovKernelHandle kernel(double t) const;
  const RadialFamily& family() const noexcept { return family_; }
  const MultiplicityVector& k() const noexcept { return k_; }

 private:
  MultiplicityVector k_;
  RadialFamily family_;
  TranslateOptions options_;
};

/// Checks sigma_s o sigma_t = sigma_{s+t} on the Hankel side at the sampled
/// pairs and frequencies, and sigma_0 = delta_0. Throws DomainError otherwise.
Semigroup build_semigroup(const MultiplicityVector& k, RadialFamily family,
                          const std::vector<std::pair<double, double>>& check_pairs = {{0.25, 0.75},
                                                                                       {0.5, 0.5}},
                          double tol = 1e-8, const TranslateOptions& options = {});

/// max |P(x,.)^(xi) / P(0,.)^(xi) - E_k(-ix, xi)| over the pairs with |P(0,.)^(xi)| > 1e-3.
double k_invariance_residual(const MarkovKernelHandle& P, const std::vector<Point>& xs,
                             const std::vector<Point>& xis);

/// max |(P_s o P_t)(x,.)^(xi) - P_{s+t}(x,.)^(xi)|, the left side expanded as
/// P_t(0,.)^(xi) * P_s(x,.)^(xi).
double semigroup_law_residual(const Semigroup& S, double s, double t, const std::vector<Point>& xs,
                              const std::vector<Point>& xis);

}  // namespace dunkl
