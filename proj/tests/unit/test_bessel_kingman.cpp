#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "dunkl/bessel_kingman.hpp"
#include "dunkl/error.hpp"
#include "dunkl/special_fn.hpp"

using namespace dunkl;

namespace {

double gk(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

double rayleigh_oracle(double lambda, double t, double r) {
  return std::pow(r, 2 * lambda + 1) * std::exp(-r * r / (4 * t)) /
         (std::pow(2.0, 2 * lambda + 1) * std::pow(t, lambda + 1) * std::tgamma(lambda + 1));
}

double j(double lambda, double x) { return bessel_j(BesselIndex(lambda), x); }

}  // namespace

TEST_CASE("product kernel") {
  CHECK(product_kernel_m(1.0, 1.0, 1.0, 3.0) == 0.0);
  CHECK(product_kernel_m(0.5, 1.0, 2.0, 2.0) == doctest::Approx(0.125).epsilon(1e-14));
  for (double alpha : {0.5, 1.0, 2.5}) {
    const double x = 1.0, y = 1.0;
    const double mass = gk([&](double z) { return product_kernel_m(alpha, x, y, z) * std::pow(z, 2 * alpha + 1); },
                           0.0, 2.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(product_kernel_m(0.7, 1.0, 2.0, 1.5) >= 0.0);
  CHECK_THROWS_AS(product_kernel_m(1.0, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("point convolutions") {
  const HypergroupIndex idx(1.0);
  const RadialProfileMeasure d = convolve_points(idx, 0.0, 2.5);
  CHECK(d.mass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.data().mass_outside(2.5 - 1e-12, 2.5 + 1e-12) == 0.0);
  const RadialProfileMeasure nu = convolve_points(idx, 1.0, 1.0);
  CHECK(nu.mass() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(nu.data().mass_outside(0.0, 2.0) <= 1e-10);
  const HypergroupIndex idx15(1.5);
  CHECK(hankel_transform(idx15, convolve_points(idx15, 1.0, 2.0), 3.0) ==
        doctest::Approx(j(1.5, 3.0) * j(1.5, 6.0)).epsilon(1e-12));
}

TEST_CASE("product formula on the reference grid") {
  double worst = 0.0, outside = 0.0;
  for (double lambda : {0.0, 0.5, 1.0, 2.5}) {
    const HypergroupIndex idx(lambda);
    for (double x : {0.3, 1.0, 2.0})
      for (double y : {0.3, 1.0, 2.0}) {
        const RadialProfileMeasure nu = convolve_points(idx, x, y);
        outside = std::max(outside, nu.data().mass_outside(std::abs(x - y) - 1e-12, x + y + 1e-12));
        for (int i = 0; i < 20; ++i) {
          const double z = 10.0 * i / 19.0;
          worst = std::max(worst, std::abs(j(lambda, x * z) * j(lambda, y * z) - hankel_transform(idx, nu, z)));
        }
      }
  }
  CHECK(worst <= 1e-7);
  CHECK(outside <= 1e-10);
}

TEST_CASE("associativity in the Hankel domain") {
  const HypergroupIndex idx(1.0);
  const auto left = convolve_measures(idx, convolve_points(idx, 0.5, 1.0), RadialProfileMeasure::point_mass(1.5, 1.0));
  const auto right = convolve_measures(idx, RadialProfileMeasure::point_mass(0.5, 1.0), convolve_points(idx, 1.0, 1.5));
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double r = 0.25 * i;
    worst = std::max(worst, std::abs(hankel_transform(idx, left, r) - hankel_transform(idx, right, r)));
    worst = std::max(worst, std::abs(hankel_transform(idx, left, r) - j(1.0, 0.5 * r) * j(1.0, r) * j(1.0, 1.5 * r)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("measure convolution") {
  const HypergroupIndex idx(0.5);
  const RadialProfileMeasure tau = rayleigh_semigroup(idx, 0.4);
  const RadialProfileMeasure same = convolve_measures(idx, RadialProfileMeasure::point_mass(0.0, 0.5), tau);
  CHECK(same.mass() == doctest::Approx(1.0).epsilon(1e-8));
  for (double r : {0.0, 0.7, 2.0}) CHECK(hankel_transform(idx, same, r) == doctest::Approx(hankel_transform(idx, tau, r)).epsilon(1e-10));

  for (auto [s, t] : std::vector<std::pair<double, double>>{{0.1, 0.2}, {0.5, 0.5}, {1.0, 2.0}}) {
    const RadialProfileMeasure conv = convolve_measures(idx, rayleigh_semigroup(idx, s), rayleigh_semigroup(idx, t));
    CHECK(conv.mass() == doctest::Approx(1.0).epsilon(1e-8));
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double r = 0.2 * i;
      worst = std::max(worst, std::abs(hankel_transform(idx, conv, r) - std::exp(-(s + t) * r * r)));
    }
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("convolution density of two Rayleigh laws") {
  const double lambda = 1.0, s = 0.3, t = 0.5;
  const HypergroupIndex idx(lambda);
  double worst = 0.0;
  for (double z : {0.2, 0.8, 1.5, 2.5, 4.0}) {
    const double v = convolution_density(
        idx, [&](double r) { return rayleigh_oracle(lambda, s, r); }, [&](double r) { return rayleigh_oracle(lambda, t, r); },
        z, 16.0);
    worst = std::max(worst, std::abs(v - rayleigh_oracle(lambda, s + t, z)));
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("hankel transform") {
  const HypergroupIndex idx(1.5);
  CHECK(hankel_transform(idx, RadialProfileMeasure::point_mass(0.0, 1.5), 3.7) == 1.0);
  CHECK(hankel_transform(idx, RadialProfileMeasure::point_mass(1.2, 1.5), 2.0) == doctest::Approx(j(1.5, 2.4)).epsilon(1e-15));
  const RadialProfileMeasure ray = rayleigh_semigroup(idx, 0.6);
  for (double r : {0.0, 0.5, 1.5, 3.0}) {
    const double oracle = gk([&](double x) { return rayleigh_oracle(1.5, 0.6, x) * j(1.5, r * x); }, 0.0, 40.0);
    CHECK(hankel_transform(idx, ray, r) == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(std::abs(oracle - std::exp(-0.6 * r * r)) < 1e-10);
  }
}

TEST_CASE("rayleigh semigroup") {
  for (double lambda : {0.0, 0.5, 2.0}) {
    const HypergroupIndex idx(lambda);
    const double t = 0.7;
    CHECK(rayleigh_semigroup(idx, t).mass() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rayleigh_density(lambda, t, 1.3) == doctest::Approx(rayleigh_oracle(lambda, t, 1.3)).epsilon(1e-13));
    const double mode = std::sqrt(2 * t * (2 * lambda + 1));
    CHECK(rayleigh_density(lambda, t, mode) > rayleigh_density(lambda, t, mode * 1.01));
    CHECK(rayleigh_density(lambda, t, mode) > rayleigh_density(lambda, t, mode * 0.99));
    CHECK(rayleigh_cdf(lambda, t, 1.1) == doctest::Approx(gk([&](double r) { return rayleigh_oracle(lambda, t, r); }, 0.0, 1.1)).epsilon(1e-12));
  }
  const RadialProfileMeasure zero = rayleigh_semigroup(HypergroupIndex(1.0), 0.0);
  CHECK(zero.data().mass_outside(0.0, 0.0) == 0.0);
  CHECK(zero.mass() == 1.0);
  CHECK_THROWS_AS(rayleigh_semigroup(HypergroupIndex(1.0), -0.1), DomainError);
}

TEST_CASE("subordination") {
  const HypergroupIndex idx(1.0);
  const auto base = [&](double s) { return rayleigh_semigroup(idx, s); };
  const auto point = subordinate(idx, base, RadialProfileMeasure::point_mass(0.8, -0.5));
  for (double r : {0.3, 1.0, 2.0}) CHECK(hankel_transform(idx, point, r) == doctest::Approx(std::exp(-0.8 * r * r)).epsilon(1e-12));

  const double t = 0.7;
  // Laplace transform of the 1/2-stable density.
  for (double u : {0.5, 2.0}) {
    const double lt = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double s) { return std::exp(-u * s) * stable_half_density(t, s); }, 0.0,
        std::numeric_limits<double>::infinity(), 15, 1e-13);
    CHECK(lt == doctest::Approx(std::exp(-t * std::sqrt(u))).epsilon(1e-9));
  }
  const RadialProfileMeasure rho = stable_half_subordinator(t);
  CHECK(rho.mass() == doctest::Approx(1.0).epsilon(1e-12));
  const RadialProfileMeasure cauchy = cauchy_semigroup(idx, t);
  CHECK(cauchy.mass() == doctest::Approx(1.0).epsilon(1e-8));
  double composed = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double r = 0.25 * i;
    composed = std::max(composed, std::abs(rho.integrate([&](double s) { return std::exp(-s * r * r); }) - std::exp(-t * r)));
  }
  CHECK(composed <= 1e-6);
}

TEST_CASE("json round trip") {
  const HypergroupIndex idx(0.5);
  const RadialProfileMeasure m = convolve_points(idx, 0.7, 1.1, 16);
  const RadialProfileMeasure back = RadialProfileMeasure::from_json(m.to_json());
  CHECK(back.lambda() == 0.5);
  CHECK(back.mass() == doctest::Approx(m.mass()).epsilon(1e-15));
  CHECK(hankel_transform(idx, back, 1.3) == doctest::Approx(hankel_transform(idx, m, 1.3)).epsilon(1e-15));
}
