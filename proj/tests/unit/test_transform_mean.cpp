#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/transform_mean.hpp"

using namespace dunkl;

namespace {

double norm(const Point& p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return std::sqrt(s);
}

ComplexPoint times_i(const Point& p) {
  ComplexPoint z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = cplx(0.0, p[i]);
  return z;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a.values()[i] - b.values()[i]));
  return e;
}

}  // namespace

TEST_CASE("grid function io") {
  const GridFunction g = GridFunction::sample({uniform_axis(2.0, 5), uniform_axis(1.0, 3)},
                                              [](const std::vector<double>& p) { return cplx(p[0], p[1] * p[1]); });
  std::stringstream csv, bin;
  g.write_csv(csv);
  std::stringstream commented("# header line\n" + csv.str());
  const GridFunction c = GridFunction::read_csv(commented);
  CHECK(c.size() == g.size());
  CHECK(max_diff(c, g) == 0.0);
  g.write_binary(bin);
  const GridFunction b = GridFunction::read_binary(bin);
  CHECK(max_diff(b, g) == 0.0);
  CHECK(b.axes()[1].weights == g.axes()[1].weights);
  std::stringstream bad("x1,re,im\n1,2\n");
  CHECK_THROWS_AS(GridFunction::read_csv(bad), DomainError);
}

TEST_CASE("dunkl transform") {
  const MultiplicityVector k({1.0, 0.5});
  const auto axes = dunkl_grid(k, 10.0, 48);
  const GridFunction gauss = GridFunction::sample(axes, [](const std::vector<double>& p) {
    return cplx(std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2));
  });
  const GridFunction gh = dunkl_transform(k, gauss);
  CHECK(max_diff(gh, gauss) < 1e-10);

  const GridFunction f = GridFunction::sample(axes, [](const std::vector<double>& p) {
    return cplx(std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2) * (1 + 0.3 * p[0]), 0.2 * p[1] * std::exp(-p[0] * p[0] - p[1] * p[1]));
  });
  const GridFunction fh = dunkl_transform(k, f);
  CHECK(max_diff(inverse_dunkl_transform(k, fh, nullptr, 1e-10), f) < 1e-5);
  CHECK(std::abs(weighted_norm_sq(k, f) / weighted_norm_sq(k, fh) - 1.0) < 1e-4);

  // k = 0 is the unitary Fourier transform.
  const MultiplicityVector k0({0.0});
  const GridFunction shifted = GridFunction::sample(dunkl_grid(k0, 12.0, 64), [](const std::vector<double>& p) {
    return cplx(std::exp(-(p[0] - 0.5) * (p[0] - 0.5)));
  });
  const GridFunction sh = dunkl_transform(k0, shifted);
  double fourier = 0.0;
  for (std::size_t i = 0; i < sh.size(); ++i) {
    const double xi = sh.point(i)[0];
    const cplx exact = std::exp(cplx(-xi * xi / 4.0, -0.5 * xi)) / std::sqrt(2.0);
    fourier = std::max(fourier, std::abs(sh.values()[i] - exact));
  }
  CHECK(fourier < 1e-10);

  const GridFunction wide = GridFunction::sample(dunkl_grid(k0, 3.0, 16), [](const std::vector<double>& p) {
    return cplx(std::exp(-0.1 * p[0] * p[0]));
  });
  CHECK_THROWS_AS(dunkl_transform(k0, wide), DomainError);
}

TEST_CASE("heat kernel") {
  for (const MultiplicityVector& k : {MultiplicityVector({1.0}), MultiplicityVector({1.0, 0.5})}) {
    const double s = 0.5;
    const Point zero(k.dim(), 0.0);
    CHECK(heat_kernel(k, s, zero, zero) ==
          doctest::Approx(std::pow(2 * s, -k.gamma() - k.dim() / 2.0) / constants(k).c_k).epsilon(1e-14));
    const Point x(k.dim(), 0.7), y(k.dim(), -0.4);
    CHECK(heat_kernel(k, s, x, y) > 0.0);
    CHECK(heat_kernel(k, s, x, y) == doctest::Approx(heat_kernel(k, s, y, x)).epsilon(1e-14));
    CHECK(std::abs(heat_kernel_spectral(k, s, x, y) - heat_kernel(k, s, x, y)) < 1e-6);
    CHECK(std::abs(heat_chapman_kolmogorov(k, 0.3, 0.4, x, y) - heat_kernel(k, 0.7, x, y)) < 1e-6);
    const HeatNormalization plain = translated_heat_normalization(k, 0.4, x, zero);
    CHECK(std::abs(plain.value - 1.0) < 1e-6);
  }
  CHECK(std::abs(translated_heat_normalization(MultiplicityVector({1.0}), 0.5, {1.0}, {-1.0}).value - 1.0) < 1e-5);
  CHECK(std::abs(translated_heat_normalization(MultiplicityVector({0.0}), 0.5, {0.6}, {0.8}).value - 1.0) < 1e-5);
  const MultiplicityVector k({1.0, 0.5});
  CHECK(std::abs(translated_heat_normalization(k, 0.3, {0.7, -0.3}, {-0.4, 1.1}).value - 1.0) < 1e-5);
  CHECK_THROWS_AS(heat_kernel(k, 0.0, {0.0, 0.0}, {0.0, 0.0}), DomainError);
}

TEST_CASE("radial translation") {
  const MultiplicityVector k({1.0, 0.5});
  const Point x{1.0, 0.3}, y{-0.4, 0.9};
  CHECK(radial_translate(k, [](double) { return 1.0; }, x, y) == doctest::Approx(1.0).epsilon(1e-12));
  const MultiplicityVector k0({0.0, 0.0});
  auto prof = [](double r) { return std::exp(-r * r) * (1 + r); };
  CHECK(radial_translate(k0, prof, x, y) == doctest::Approx(prof(norm({x[0] + y[0], x[1] + y[1]}))).epsilon(1e-14));
  // Arguments stay between min_g |x + gy| and max_g |x + gy|.
  double lo = 1e9, hi = 0.0;
  for (const auto& g : group_elements(2)) {
    const Point gy = g.apply(y);
    lo = std::min(lo, norm({x[0] + gy[0], x[1] + gy[1]}));
    hi = std::max(hi, norm({x[0] + gy[0], x[1] + gy[1]}));
  }
  CHECK(radial_translate(k, [&](double r) { return r < lo - 1e-12 || r > hi + 1e-12 ? 1.0 : 0.0; }, x, y) == 0.0);
  CHECK(radial_translate(k, [](double r) { return std::cos(3 * r) * std::cos(3 * r); }, x, y) >= 0.0);
  const double rho = 1.7;
  const Point z{0.4, -0.9};
  const double via_translate =
      radial_translate(k, [&](double r) { return bessel_j(BesselIndex(k.lambda()), r * rho); }, x, {-z[0], -z[1]});
  CHECK(std::abs(via_translate - orbit_integral_I(k, x, z, rho, sphere_quadrature(k, 96))) < 1e-6);
}

TEST_CASE("spherical mean") {
  const MultiplicityVector k({1.0, 0.5});
  const Point x{1.0, 0.3};
  auto f = [](const Point& p) { return std::exp(-p[0] * p[0] - 2 * p[1] * p[1]) + p[0]; };
  CHECK(spherical_mean(k, f, x, 0.0) == doctest::Approx(f(x)).epsilon(1e-14));
  CHECK(spherical_mean(k, [](const Point&) { return 1.0; }, x, 0.8) == doctest::Approx(1.0).epsilon(1e-12));
  const double t = 0.7;
  const SphericalMeanMeasure sigma = sigma_measure(k, x, t);
  CHECK(sigma.min_weight() >= 0.0);
  double worst = 0.0;
  for (double z1 = -3.0; z1 <= 3.0; z1 += 1.5)
    for (double z2 = -3.0; z2 <= 3.0; z2 += 1.5) {
      const Point z{z1, z2};
      const cplx m = sigma.integrate_complex([&](const Point& p) { return dunkl_kernel(k, times_i(p), to_complex(z)); });
      const cplx exact = dunkl_kernel(k, times_i(x), to_complex(z)) * bessel_j(BesselIndex(k.lambda()), t * norm(z));
      worst = std::max(worst, std::abs(m - exact));
    }
  CHECK(worst <= 1e-6);

  // Three routes for a radial function.
  auto prof = [](double r) { return std::exp(-r * r); };
  const double a = spherical_mean_radial(k, prof, x, t);
  const double cloud = spherical_mean(k, [&](const Point& p) { return prof(norm(p)); }, x, t);
  const GridFunction g = GridFunction::sample(dunkl_grid(k, 10.0, 48), [&](const std::vector<double>& p) { return cplx(prof(norm(p))); });
  const double b = spherical_mean_spectral(k, dunkl_transform(k, g), x, t).real();
  CHECK(std::abs(a - cloud) < 1e-8);
  CHECK(std::abs(a - b) < 1e-6);

  // Plain continuity in the parameters.
  const double base = spherical_mean(k, f, x, t);
  CHECK(std::abs(spherical_mean(k, f, {x[0] + 1e-6, x[1]}, t + 1e-6) - base) < 1e-5);
}

TEST_CASE("support checks") {
  const SupportReport r1 = sigma_support_check(MultiplicityVector({1.0}), {1.0}, 0.3, 40);
  CHECK(r1.passed);
  CHECK(r1.max_violation <= 1e-8);
  const SupportReport r2 = sigma_support_check(MultiplicityVector({1.0, 1.0}), {0.0, 0.0}, 1.0, 30);
  CHECK(r2.passed);
  const SupportReport r3 = sigma_support_check(MultiplicityVector({1.0, 1.0}), {1.0, 0.0}, 0.5, 50);
  CHECK(r3.passed);
  CHECK(r3.trials == 50);
  const SphericalMeanMeasure s = sigma_measure(MultiplicityVector({1.0, 0.5}), {1.2, -0.5}, 0.4);
  const auto [lo, hi] = s.radial_extent();
  CHECK(lo >= std::abs(norm({1.2, -0.5}) - 0.4) - 1e-12);
  CHECK(hi <= norm({1.2, -0.5}) + 0.4 + 1e-12);
}

TEST_CASE("darboux equation") {
  const MultiplicityVector k({1.0, 0.5});
  auto f = [](const Point& p) { return std::exp(-p[0] * p[0] - 0.5 * p[1] * p[1] + 0.3 * p[0]); };
  const double r1 = darboux_residual(k, f, {0.8, -0.4}, 0.6, 0.02);
  const double r2 = darboux_residual(k, f, {0.8, -0.4}, 0.6, 0.01);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.1));
  CHECK(std::abs(initial_velocity(k, f, {0.8, -0.4}, 0.01)) < 1e-5);
  // Classical case: residual is small and shrinks.
  const MultiplicityVector k0({0.0, 0.0});
  CHECK(darboux_residual(k0, f, {0.8, -0.4}, 0.6, 0.01) < darboux_residual(k0, f, {0.8, -0.4}, 0.6, 0.02));
  const MultiplicityVector k1({1.0});
  auto g = [](const Point& p) { return std::exp(-p[0] * p[0]); };
  CHECK(darboux_residual(k1, g, {0.8}, 0.6, 0.01) < 1e-6);
  CHECK_THROWS_AS(darboux_residual(k1, g, {0.8}, 0.01, 0.02), DomainError);
}
