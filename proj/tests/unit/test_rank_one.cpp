#include <doctest.h>

#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/rank_one.hpp"
#include "dunkl/special_fn.hpp"

using namespace dunkl;

namespace {

cplx j_series(double alpha, cplx z) {
  cplx sum = 0.0, term = 1.0;
  for (int n = 0; n < 80; ++n) {
    sum += term;
    term *= -(z * z / 4.0) / (static_cast<double>(n + 1) * (n + 1 + alpha));
  }
  return sum;
}

// E_k(z, w) = j_{k-1/2}(izw) + zw/(2k+1) j_{k+1/2}(izw), from the series.
cplx kernel_oracle(double k, cplx z, cplx w) {
  const cplx u = cplx(0.0, 1.0) * z * w;
  return j_series(k - 0.5, u) + z * w / (2 * k + 1) * j_series(k + 0.5, u);
}

cplx kernel(double k, double x, double z) { return dunkl_kernel_rank1(RankOneMultiplicity(k), cplx(0.0, x), z); }

}  // namespace

TEST_CASE("rank-one kernel") {
  CHECK(dunkl_kernel_rank1(RankOneMultiplicity(2.0), 3.0, 0.0) == cplx(1.0, 0.0));
  CHECK(dunkl_kernel_rank1(RankOneMultiplicity(0.0), 1.2, 0.5).real() == doctest::Approx(std::exp(0.6)).epsilon(1e-14));
  CHECK(dunkl_kernel_rank1(RankOneMultiplicity(1.0), 1.0, 1.0).real() == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
  for (double k : {0.25, 1.0, 2.5})
    for (cplx z : {cplx(0.7, 0.0), cplx(0.0, 1.3), cplx(-1.1, 0.4)})
      for (cplx w : {cplx(1.5, 0.0), cplx(0.3, -0.9)}) {
        const cplx v = dunkl_kernel_rank1(RankOneMultiplicity(k), z, w);
        CHECK(std::abs(v - dunkl_kernel_rank1(RankOneMultiplicity(k), w, z)) < 1e-14);
        CHECK(std::abs(v - kernel_oracle(k, z, w)) < 1e-12 * std::abs(v));
      }
  for (double x : {-2.0, -0.3, 0.8, 3.0}) {
    const cplx v = dunkl_kernel_rank1(RankOneMultiplicity(1.5), x, 1.7);
    CHECK(v.real() > 0.0);
    CHECK(v.imag() == 0.0);
  }
  CHECK_THROWS_AS(RankOneMultiplicity(-0.1), DomainError);
}

TEST_CASE("signed product measures") {
  const RankOneMultiplicity k(1.0);
  const SignedLineMeasure d = signed_product_measure(k, 0.0, 1.7);
  CHECK(d.mass() == 1.0);
  CHECK(d.data().mass_outside(1.7, 1.7) == 0.0);
  CHECK(signed_product_measure(k, 1.0, 1.0).mass() == doctest::Approx(1.0).epsilon(1e-10));
  const SignedLineMeasure mu = signed_product_measure(k, 1.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double z = 5.0 * i / 19.0;
    worst = std::max(worst, std::abs(kernel(1.0, 1.0, z) * kernel(1.0, 2.0, z) - dunkl_transform_measure_rank1(k, mu, z)));
  }
  CHECK(worst <= 1e-6);
  // Pure translation at k = 0.
  const SignedLineMeasure shift = signed_product_measure(RankOneMultiplicity(0.0), 0.4, 1.1);
  CHECK(shift.data().mass_outside(1.5 - 1e-15, 1.5 + 1e-15) == 0.0);
}

TEST_CASE("total variation of point convolutions stays bounded") {
  double bound = 0.0;
  for (double kv : {0.5, 1.0, 3.0})
    for (double x : {-2.0, -0.5, 0.3, 1.0})
      for (double y : {-1.0, 0.2, 0.7, 2.0}) {
        const double tv = signed_product_measure(RankOneMultiplicity(kv), x, y).total_variation();
        CHECK(std::isfinite(tv));
        bound = std::max(bound, tv);
      }
  MESSAGE("largest total variation " << bound);
  CHECK(bound <= 4.0);
}

TEST_CASE("signed convolution") {
  const RankOneMultiplicity k(1.0);
  const SignedLineMeasure nu = signed_product_measure(k, 0.6, -1.1);
  const SignedLineMeasure unit = convolve_rank1(k, SignedLineMeasure::point_mass(0.0), nu);
  for (double z : {0.0, 0.8, 2.3}) CHECK(std::abs(dunkl_transform_measure_rank1(k, unit, z) - dunkl_transform_measure_rank1(k, nu, z)) < 1e-12);
  const SignedLineMeasure pm = convolve_rank1(k, SignedLineMeasure::point_mass(1.0), SignedLineMeasure::point_mass(-1.0));
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double z = 0.25 * i;
    worst = std::max(worst, std::abs(dunkl_transform_measure_rank1(k, pm, z) - kernel(1.0, 1.0, z) * kernel(1.0, -1.0, z)));
  }
  CHECK(worst <= 1e-6);
  const SignedLineMeasure mn = convolve_rank1(k, nu, signed_product_measure(k, 0.4, 0.9));
  worst = 0.0;
  for (double z : {0.3, 1.0, 2.0})
    worst = std::max(worst, std::abs(dunkl_transform_measure_rank1(k, mn, z) -
                                     kernel(1.0, 0.6, z) * kernel(1.0, -1.1, z) * kernel(1.0, 0.4, z) * kernel(1.0, 0.9, z)));
  CHECK(worst <= 1e-6);
}

TEST_CASE("rank-one spherical mean") {
  const RankOneMultiplicity k(1.0);
  CHECK(spherical_mean_rank1(k, [](double) { return 1.0; }, 0.7, 1.3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spherical_mean_rank1(k, [](double s) { return std::sin(s); }, 0.7, 0.0) == doctest::Approx(std::sin(0.7)).epsilon(1e-15));
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double z = 0.2 * i;
    const double re = spherical_mean_rank1(k, [&](double s) { return kernel(1.0, s, z).real(); }, 1.0, 0.5);
    const double im = spherical_mean_rank1(k, [&](double s) { return kernel(1.0, s, z).imag(); }, 1.0, 0.5);
    // lambda = gamma + N/2 - 1 = k - 1/2 in rank one.
    worst = std::max(worst, std::abs(cplx(re, im) - kernel(1.0, 1.0, z) * bessel_j(BesselIndex(0.5), 0.5 * z)));
  }
  CHECK(worst <= 1e-6);
  const double inside = sigma_interval_mass_rank1(k, 1.0, 0.3, -1.3, -0.7) + sigma_interval_mass_rank1(k, 1.0, 0.3, 0.7, 1.3);
  CHECK(std::abs(1.0 - inside) <= 1e-8);
  CHECK(spherical_mean_rank1(k, [](double s) { return s * s; }, -0.4, 0.9) >= 0.0);
}

TEST_CASE("sigma measures") {
  const SignedLineMeasure origin = sigma_measure_rank1(RankOneMultiplicity(1.0), 0.0, 0.0);
  CHECK(origin.mass() == 1.0);
  CHECK(origin.data().mass_outside(0.0, 0.0) == 0.0);
  const RankOneMultiplicity k(1.0);
  CHECK(sigma_interval_mass_rank1(k, 1.0, 1.0, -0.05, 0.05) > 0.0);
  CHECK(sigma_interval_mass_rank1(k, 1.0, 0.8, -0.05, 0.05) == 0.0);
  const SignedLineMeasure s = sigma_measure_rank1(RankOneMultiplicity(0.5), 2.0, 0.5);
  CHECK(s.is_probability());
  CHECK(s.mass() == doctest::Approx(1.0).epsilon(1e-9));
  double min_density = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double z = -2.5 + 5.0 * i / 4000.0;
    if (std::abs(std::abs(z) - 1.5) < 1e-9 || std::abs(std::abs(z) - 2.5) < 1e-9) continue;
    min_density = std::min(min_density, sigma_density_rank1(RankOneMultiplicity(0.5), 2.0, 0.5, z));
  }
  CHECK(min_density >= -1e-12);
}

TEST_CASE("sigma equivariance and dilation") {
  double reflect = 0.0, dilate = 0.0;
  for (double kv : {0.5, 1.0, 2.0}) {
    const RankOneMultiplicity k(kv);
    const double x = 0.9, t = 0.4;
    for (int i = 1; i < 200; ++i) {
      const double z = -1.4 + 2.8 * i / 200.0;
      const double base = sigma_density_rank1(k, x, t, z);
      reflect = std::max(reflect, std::abs(sigma_density_rank1(k, -x, t, -z) - base));
      for (double r : {0.5, 2.0})
        dilate = std::max(dilate, std::abs(r * sigma_density_rank1(k, r * x, r * t, r * z) - base) / std::max(1.0, std::abs(base)));
    }
  }
  CHECK(reflect <= 1e-10);
  CHECK(dilate <= 1e-8);
}

TEST_CASE("small k approaches translation") {
  const RankOneMultiplicity k(1e-3);
  const double x = 0.7, y = 0.5;
  const SignedLineMeasure mu = signed_product_measure(k, x, y);
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double z = -2.0 + 0.2 * i;
    worst = std::max(worst, std::abs(dunkl_transform_measure_rank1(k, mu, z) - std::exp(cplx(0.0, (x + y) * z))));
  }
  CHECK(worst <= 5e-3);
}
