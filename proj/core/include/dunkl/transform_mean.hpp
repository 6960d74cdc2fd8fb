#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dunkl/dunkl_core.hpp"
#include "dunkl/grid.hpp"

namespace dunkl {

/// Tensor grid of dunkl_axis(k_i, R, half_nodes) axes.
std::vector<GridAxis> dunkl_grid(const MultiplicityVector& k, double R, int half_nodes);

/// f^(xi) = c_k^{-1} int f(x) E_k(-i xi, x) w_k(x) dx on the frequency axes (default: f's axes).
/// Throws DomainError if f does not decay below decay_tol at the box boundary.
GridFunction dunkl_transform(const MultiplicityVector& k, const GridFunction& f,
                             const std::vector<GridAxis>* frequency_axes = nullptr,
                             double decay_tol = 1e-12);

/// Inverse transform: f(x) = F^(-x).
GridFunction inverse_dunkl_transform(const MultiplicityVector& k, const GridFunction& f,
                                     const std::vector<GridAxis>* space_axes = nullptr,
                                     double decay_tol = 1e-12);

/// int |f|^2 w_k dx by the grid weights.
double weighted_norm_sq(const MultiplicityVector& k, const GridFunction& f);

/// Gamma_k(s, x, y) in closed form.
double heat_kernel(const MultiplicityVector& k, double s, const Point& x, const Point& y);

/// Gamma_k(s, x, y) = c_k^{-2} int e^{-s|xi|^2} E_k(-ix, xi) E_k(iy, xi) w_k(xi) dxi by quadrature.
double heat_kernel_spectral(const MultiplicityVector& k, double s, const Point& x, const Point& y,
                            int nodes = 160);

/// Gamma_k(s, x *_k y, z) by the triple-product spectral integral.
double translated_heat_kernel(const MultiplicityVector& k, double s, const Point& x,
                              const Point& y, const Point& z, int nodes = 160);

struct HeatNormalization {
  double value;
  double truncation;  // bound on the discarded spectral tail
};

/// int Gamma_k(s, x *_k y, z) w_k(z) dz with the kernel evaluated on a z-grid.
HeatNormalization translated_heat_normalization(const MultiplicityVector& k, double s,
                                                const Point& x, const Point& y, int nodes = 160);

/// int Gamma_k(s, x, z) Gamma_k(t, z, y) w_k(z) dz.
double heat_chapman_kolmogorov(const MultiplicityVector& k, double s, double t, const Point& x,
                               const Point& y, int nodes = 160);

/// f(x *_k y) for radial f(xi) = profile(|xi|): int profile(sqrt(|x|^2+|y|^2+2<x,eta>)) dmu_y(eta).
double radial_translate(const MultiplicityVector& k, const std::function<double(double)>& profile,
                        const Point& x, const Point& y, int nodes = 32);

/// Probability rule for w_k dsigma / d_k on S^{N-1}.
struct WeightedSphereRule {
  std::vector<Point> nodes;
  std::vector<double> weights;
};

/// Nodes in the closed positive orthant (|y_i| only), from the Dirichlet(k_i + 1/2) law of (y_i^2).
WeightedSphereRule orthant_rule(const MultiplicityVector& k, int nodes);

/// orthant_rule mirrored over all 2^N sign patterns.
WeightedSphereRule weighted_sphere_rule(const MultiplicityVector& k, int nodes);

/// Positive weighted point cloud representing sigma_{x,t}.
class SphericalMeanMeasure {
 public:
  SphericalMeanMeasure(std::size_t dim, std::vector<double> points, std::vector<double> weights);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return weights_.size(); }
  Point point(std::size_t i) const;
  const std::vector<double>& weights() const noexcept { return weights_; }
  double mass() const;
  double min_weight() const;
  double integrate(const ScalarField& f) const;
  cplx integrate_complex(const std::function<cplx(const Point&)>& f) const;
  /// Smallest and largest |xi| over the cloud.
  std::pair<double, double> radial_extent() const;

 private:
  std::size_t dim_;
  std::vector<double> points_;
  std::vector<double> weights_;
};

struct MeanOptions {
  int sphere_nodes = 24;
  int line_nodes = 24;
};

/// sigma_{x,t} = int (tensor_i sigma^{k_i}_{x_i, t|y_i|}) w_k(y) dsigma(y) / d_k.
SphericalMeanMeasure sigma_measure(const MultiplicityVector& k, const Point& x, double t,
                                   const MeanOptions& options = {});

/// M_f(x, t) = int f dsigma_{x,t}.
double spherical_mean(const MultiplicityVector& k, const ScalarField& f, const Point& x, double t,
                      const MeanOptions& options = {});

/// M_f(x, t) for radial f through radial_translate and sphere quadrature.
double spherical_mean_radial(const MultiplicityVector& k,
                             const std::function<double(double)>& profile, const Point& x,
                             double t, int sphere_nodes = 24, int nodes = 32);

/// M_f(x, t) = c_k^{-1} int f^(xi) E_k(x, i xi) j_lambda(t|xi|) w_k(xi) dxi from a transformed grid.
cplx spherical_mean_spectral(const MultiplicityVector& k, const GridFunction& f_hat,
                             const Point& x, double t);

struct SupportReport {
  bool passed;
  double max_violation;
  int trials;
};

/// Evaluates M_f for nonnegative bumps placed outside the support predicted for sigma_{x,t}.
SupportReport sigma_support_check(const MultiplicityVector& k, const Point& x, double t, int trials,
                                  std::uint64_t seed = 7, const MeanOptions& options = {});

/// |(Delta_k^x - d_t^2 - (2 lambda + 1)/t d_t) M_f(x, t)| by finite differences of step h.
double darboux_residual(const MultiplicityVector& k, const ScalarField& f, const Point& x, double t,
                        double h, const MeanOptions& options = {});

/// One-sided second-order estimate of d_t M_f(x, 0).
double initial_velocity(const MultiplicityVector& k, const ScalarField& f, const Point& x, double h,
                        const MeanOptions& options = {});

}  // namespace dunkl
