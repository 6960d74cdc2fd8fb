#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "dunkl/dunkl_core.hpp"
#include "dunkl/error.hpp"
#include "dunkl/harmonics.hpp"
#include "dunkl/special_fn.hpp"

using namespace dunkl;

namespace {

// (1/d_k) int_{S^1} f w_k dsigma by adaptive quadrature on each quadrant.
double circle_mean(const MultiplicityVector& k, const std::function<double(const Point&)>& f) {
  double total = 0.0;
  for (int q = 0; q < 4; ++q)
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double th) {
          const Point p{std::cos(th), std::sin(th)};
          return f(p) * weight(k, p);
        },
        q * std::numbers::pi / 2, (q + 1) * std::numbers::pi / 2, 20, 1e-14);
  return total / constants(k).d_k;
}

Point polar(double r, double th) { return {r * std::cos(th), r * std::sin(th)}; }

}  // namespace

TEST_CASE("sphere quadrature") {
  for (const MultiplicityVector& k : {MultiplicityVector({1.0, 1.0}), MultiplicityVector({1.0, 0.5}), MultiplicityVector({0.3, 2.0})}) {
    const SphereQuadrature rule = sphere_quadrature(k);
    double total = 0.0, normalized = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      total += rule.weights[i] * weight(k, rule.nodes[i]);
      normalized += rule.normalized[i];
      CHECK(rule.weights[i] > 0.0);
    }
    CHECK(total == doctest::Approx(constants(k).d_k).epsilon(1e-8));
    CHECK(normalized == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rule.exact_degree > 0);
  }
}

TEST_CASE("harmonic basis") {
  const MultiplicityVector k({1.0, 0.5});
  CHECK(harmonic_basis(k, 0).size() == 1);
  for (int n = 1; n <= 6; ++n) {
    const auto& basis = harmonic_basis(k, n);
    CHECK(basis.size() == 2);
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const HarmonicPolynomial lap = apply_dunkl_laplacian(k, basis[a]);
      for (double c : lap.coeffs) CHECK(std::abs(c) < 1e-10);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const double g = circle_mean(k, [&](const Point& p) { return basis[a](p) * basis[b](p); });
        CHECK(std::abs(g - (a == b ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(harmonic_basis(MultiplicityVector({1.0}), 1), DomainError);
  CHECK(harmonic_basis_json(k, 2).find("\"basis\"") != std::string::npos);
}

TEST_CASE("reproducing kernels") {
  const MultiplicityVector k({1.0, 0.5});
  const SphereQuadrature rule = sphere_quadrature(k, 128);
  CHECK(reproducing_kernel_P(k, 0, polar(1.0, 0.3), polar(1.0, 2.0)) == doctest::Approx(1.0).epsilon(1e-12));
  const Point x = polar(1.0, 0.4), z = polar(1.0, 2.3);
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      double integral = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i)
        integral += rule.normalized[i] * reproducing_kernel_P(k, n, x, rule.nodes[i]) * reproducing_kernel_P(k, m, rule.nodes[i], z);
      worst = std::max(worst, std::abs(integral - (n == m ? reproducing_kernel_P(k, n, x, z) : 0.0)));
    }
  CHECK(worst <= 1e-6);
  // Homogeneity, symmetry and the Gegenbauer bound.
  CHECK(reproducing_kernel_P(k, 3, {2.0 * x[0], 2.0 * x[1]}, z) == doctest::Approx(8.0 * reproducing_kernel_P(k, 3, x, z)).epsilon(1e-12));
  CHECK(reproducing_kernel_P(k, 3, x, z) == doctest::Approx(reproducing_kernel_P(k, 3, z, x)).epsilon(1e-10));
  for (double th = 0.0; th < 6.3; th += 0.7) CHECK(std::abs(intertwined_gegenbauer(k, 5, x, polar(1.0, th))) <= 1.0 + 1e-12);
  // The reproducing kernel of H_n is the sum of Y(x) Y(y) over an orthonormal basis.
  for (int n = 1; n <= 4; ++n) {
    double sum = 0.0;
    for (const auto& Y : harmonic_basis(k, n)) sum += Y(x) * Y(z);
    CHECK(reproducing_kernel_P(k, n, x, z) == doctest::Approx(sum).epsilon(1e-8));
  }
}

TEST_CASE("kernel series") {
  const MultiplicityVector k({1.0, 1.0});
  CHECK(kernel_series(k, {0.0, 0.0}, {0.4, 1.1}, 0) == cplx(1.0, 0.0));
  double e10 = 0.0, e20 = 0.0;
  for (double a : {0.0, 1.1, 2.5})
    for (double b : {0.3, 1.9}) {
      const Point x = polar(1.0, a), y = polar(1.0, b);
      ComplexPoint ix = to_complex(x);
      for (cplx& v : ix) v *= cplx(0.0, 1.0);
      const cplx exact = dunkl_kernel(k, ix, to_complex(y));
      e10 = std::max(e10, std::abs(kernel_series(k, x, y, 10) - exact));
      e20 = std::max(e20, std::abs(kernel_series(k, x, y, 20) - exact));
      CHECK(std::abs(kernel_series(k, x, y, 10) - exact) <= kernel_series_tail_bound(k, x, y, 10) + 1e-12);
    }
  CHECK(e20 <= 1e-8);
  CHECK(e10 > e20);
}

TEST_CASE("funk-hecke") {
  const MultiplicityVector k({1.0, 0.5});
  const SphereQuadrature rule = sphere_quadrature(k, 128);
  const double lambda = k.lambda();
  for (double r : {0.5, 1.3, 3.0}) {
    const Point x = polar(r, 0.7);
    CHECK(std::abs(funk_hecke(k, x, harmonic_basis(k, 0)[0], rule) - bessel_j(BesselIndex(lambda), r)) < 1e-7);
    for (int n = 1; n <= 4; ++n)
      for (const auto& Y : harmonic_basis(k, n))
        CHECK(std::abs(funk_hecke(k, x, Y, rule) - funk_hecke_closed_form(k, x, Y)) < 1e-7);
  }
  CHECK(std::abs(funk_hecke(k, {0.0, 0.0}, harmonic_basis(k, 2)[0], rule)) < 1e-14);
  HarmonicPolynomial not_harmonic{2, {1.0, 0.0, 1.0}};
  CHECK_THROWS_AS(funk_hecke(k, {0.3, 0.2}, not_harmonic, rule), DomainError);
}

TEST_CASE("addition theorems") {
  CHECK(addition_theorem_residual(1.5, 1.2, 0.7, 0.0, 30) <= 1e-9);
  CHECK(addition_theorem_residual(2.0, 0.0, 1.4, 1.1, 0) <= 1e-15);
  CHECK(addition_theorem_residual(1.0, 1.0, 1.0, std::numbers::pi / 2, 25) <= 1e-8);
  CHECK(addition_theorem_residual(1.0, 1.0, 1.0, 1.0, 5) > addition_theorem_residual(1.0, 1.0, 1.0, 1.0, 15));
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 10; ++j) worst = std::max(worst, expansion_residual(1.5, 0.5 * i, -1.0 + 0.2 * j, 40));
  CHECK(worst <= 1e-8);
  for (int n = 0; n <= 40; ++n)
    CHECK(series_coefficient(1.5, n) == doctest::Approx(std::tgamma(2.5) / (std::pow(2.0, n) * std::tgamma(n + 2.5))).epsilon(1e-12));
}

TEST_CASE("orbit integral") {
  const MultiplicityVector k({1.0, 0.5});
  const SphereQuadrature rule = sphere_quadrature(k, 128);
  const double lambda = k.lambda();
  const Point z{0.6, -0.9};
  CHECK(orbit_integral_I(k, {0.0, 0.0}, z, 1.7, rule) == doctest::Approx(bessel_j(BesselIndex(lambda), 1.7 * std::hypot(z[0], z[1]))).epsilon(1e-8));
  CHECK(orbit_integral_I(k, z, {0.0, 0.0}, 1.7, rule) == doctest::Approx(bessel_j(BesselIndex(lambda), 1.7 * std::hypot(z[0], z[1]))).epsilon(1e-8));
  const OrbitIntegral both = orbit_integral_routes(k, {1.0, 0.0}, {0.0, 1.0}, 2.0, rule);
  CHECK(std::abs(both.sphere - both.intertwiner) <= 1e-6);
  CHECK(orbit_integral_I(k, {0.3, 0.8}, {-0.5, 0.2}, 1.5, rule) ==
        doctest::Approx(orbit_integral_I(k, {-0.5, 0.2}, {0.3, 0.8}, 1.5, rule)).epsilon(1e-8));
}
