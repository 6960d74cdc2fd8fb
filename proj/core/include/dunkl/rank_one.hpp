#pragma once

#include <functional>

#include "dunkl/measures.hpp"
#include "dunkl/special_fn.hpp"

namespace dunkl {

class RankOneMultiplicity {
 public:
  explicit RankOneMultiplicity(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

/// E_k(z, w) = j_{k-1/2}(izw) + zw/(2k+1) j_{k+1/2}(izw).
cplx dunkl_kernel_rank1(RankOneMultiplicity k, cplx z, cplx w);

/// log E_k(u, 1) for real u; switches to the large-argument expansion of I_nu when |u| is large.
double log_dunkl_kernel_rank1(RankOneMultiplicity k, double u);

/// Density of mu_{x,y} at z (zero off the support). Requires k > 0 and x, y != 0.
double signed_product_density(RankOneMultiplicity k, double x, double y, double z);

/// mu_{x,y}: the signed measure with E(ix,.)E(iy,.) = int E(i xi,.) dmu(xi).
SignedLineMeasure signed_product_measure(RankOneMultiplicity k, double x, double y, int nodes = 64);

struct RankOneConvolveOptions {
  std::size_t max_atoms = 512;
  int nodes = 32;
};

SignedLineMeasure convolve_rank1(RankOneMultiplicity k, const SignedLineMeasure& mu,
                                 const SignedLineMeasure& nu,
                                 const RankOneConvolveOptions& options = {});

/// int E_k(i xi, z) dmu(xi).
cplx dunkl_transform_measure_rank1(RankOneMultiplicity k, const SignedLineMeasure& mu, double z);

/// Density of sigma_{x,t} at z. Requires k > 0, x != 0, t > 0.
double sigma_density_rank1(RankOneMultiplicity k, double x, double t, double z);

/// sigma_{x,t} = (mu_{x,t} + mu_{x,-t}) / 2, a probability measure.
///
/// Throws NumericalError if a scan of the density over `scan_points` points
/// per support component finds a value below -1e-9.
SignedLineMeasure sigma_measure_rank1(RankOneMultiplicity k, double x, double t, int nodes = 64,
                                      int scan_points = 2048);

/// sigma_{x,t}([a, b]) by Jacobi quadrature on each support component.
double sigma_interval_mass_rank1(RankOneMultiplicity k, double x, double t, double a, double b,
                                 int nodes = 64);

/// M_f(x, t) = int f dsigma_{x,t}.
double spherical_mean_rank1(RankOneMultiplicity k, const std::function<double(double)>& f,
                            double x, double t, int nodes = 64);

}  // namespace dunkl
