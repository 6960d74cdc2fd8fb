#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/markov.hpp"

using namespace dunkl;

namespace {

ComplexPoint times_i(const Point& p) {
  ComplexPoint z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = cplx(0.0, p[i]);
  return z;
}

const MultiplicityVector k1({1.0});

}  // namespace

TEST_CASE("radial measures") {
  const auto heat = gaussian_family(k1);
  const KRadialMeasure mu = heat(0.4);
  CHECK(mu.profile().mass() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(radial_hat(k1, mu, {0.0}) == doctest::Approx(1.0).epsilon(1e-12));
  for (double r : {0.3, 1.0, 2.5}) {
    CHECK(std::abs(radial_hat(k1, mu, {r}) - std::exp(-0.4 * r * r)) < 1e-10);
    CHECK(std::abs(mu.hankel_from_profile(r) - std::exp(-0.4 * r * r)) < 1e-7);
    CHECK(radial_hat(k1, mu, {-r}) == radial_hat(k1, mu, {r}));
  }
  const MultiplicityVector k2({1.0, 0.5});
  const KRadialMeasure mu2 = gaussian_family(k2)(0.3);
  const double r = 1.3;
  for (int j = 0; j < 8; ++j) {
    const double a = j * 0.785398163397448;
    CHECK(radial_hat(k2, mu2, {r * std::cos(a), r * std::sin(a)}) ==
          doctest::Approx(std::exp(-0.3 * r * r)).epsilon(1e-12));
  }
  // Profile index must match k.
  CHECK_THROWS_AS(KRadialMeasure(k2, rayleigh_semigroup(HypergroupIndex(0.5), 0.3)), DomainError);
}

TEST_CASE("cauchy density") {
  const double lambda = 0.5, t = 0.8;
  const double mass = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double r) { return cauchy_density(lambda, t, r); }, 0.0, std::numeric_limits<double>::infinity(), 12, 1e-12);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  const KRadialMeasure c = cauchy_family(k1)(t);
  for (double r : {0.5, 1.0, 3.0}) CHECK(std::abs(c.hankel_from_profile(r) - std::exp(-t * r)) < 1e-3);
  CHECK(std::abs(c.hankel(2.0) - std::exp(-2.0 * t)) < 1e-6);
}

TEST_CASE("translation") {
  const auto heat = gaussian_family(k1);
  const KRadialMeasure mu = heat(0.5);
  const ScalarField f = [](const Point& p) { return std::exp(-p[0] * p[0]) * (1.0 + p[0]); };
  // x = 0 integrates against mu itself.
  const double at0 = translate_measure(k1, {0.0}, mu, f);
  const double direct = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double y) { return f({y}) * heat_kernel(k1, 0.5, {0.0}, {y}) * weight(k1, {y}); }, -12.0, 12.0, 10, 1e-13);
  CHECK(std::abs(at0 - direct) < 1e-8);
  // Point mass at the origin returns f(x).
  const KRadialMeasure delta = KRadialMeasure::point_mass_at_origin(k1);
  CHECK(translate_measure(k1, {0.7}, delta, f) == doctest::Approx(f({0.7})).epsilon(1e-12));
  CHECK(translate_measure(k1, {0.7}, mu, ScalarField([](const Point&) { return 1.0; })) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(translate_measure(k1, {0.7}, mu, ScalarField([](const Point& p) { return std::sin(3 * p[0]) * std::sin(3 * p[0]); })) >= -1e-9);
  for (double z : {0.5, 1.5, 3.0}) {
    const std::function<cplx(const Point&)> g = [&](const Point& p) {
      return dunkl_kernel(k1, times_i(p), to_complex(Point{z}));
    };
    const cplx v = translate_measure(k1, {1.0}, mu, g);
    const cplx exact = dunkl_kernel(k1, times_i({1.0}), to_complex(Point{z})) * std::exp(-0.5 * z * z);
    CHECK(std::abs(v - exact) < 1e-6);
  }
}

TEST_CASE("convolution in M_k^1") {
  const auto heat = gaussian_family(k1);
  const KRadialMeasure a = heat(0.3), b = heat(0.45);
  const KRadialMeasure ab = convolve_k(k1, a, b);
  const KRadialMeasure ba = convolve_k(k1, b, a);
  CHECK(ab.profile().mass() == doctest::Approx(1.0).epsilon(1e-10));
  for (double r : {0.2, 1.0, 2.0, 3.5}) {
    CHECK(std::abs(radial_hat(k1, ab, {r}) - std::exp(-0.75 * r * r)) < 1e-7);
    CHECK(std::abs(radial_hat(k1, ab, {r}) - radial_hat(k1, ba, {r})) < 1e-7);
  }
  const KRadialMeasure unit = convolve_k(k1, KRadialMeasure::point_mass_at_origin(k1), b);
  for (double r : {0.5, 2.0}) CHECK(std::abs(radial_hat(k1, unit, {r}) - radial_hat(k1, b, {r})) < 1e-10);
}

TEST_CASE("gaussian semigroup") {
  const Semigroup S = build_semigroup(k1, gaussian_family(k1));
  const MarkovKernelHandle P = S.kernel(0.5);
  const std::vector<Point> xs{{0.0}, {0.8}, {-1.5}};
  const std::vector<Point> xis{{0.3}, {1.0}, {-2.0}};
  CHECK(k_invariance_residual(P, xs, xis) < 1e-6);
  CHECK(semigroup_law_residual(S, 0.25, 0.75, xs, xis) < 1e-5);
  CHECK(semigroup_law_residual(S, 0.5, 0.5, xs, xis) < 1e-5);
  auto f = [](const Point& p) { return std::cos(p[0]) + 2.0; };
  CHECK(S.kernel(0.0)({0.6}, f) == doctest::Approx(f({0.6})).epsilon(1e-12));
  // Box probabilities match the heat density.
  const double x = 0.6, lo = -0.2, hi = 1.1, t = 0.5;
  const double exact = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double y) { return heat_kernel(k1, t, {x}, {y}) * weight(k1, {y}); }, lo, hi, 10, 1e-13);
  CHECK(std::abs(P.box_mass({x}, {lo}, {hi}) - exact) < 1e-4);
  // Weak continuity of t -> mu_t.
  const auto family = S.family();
  for (double s : {0.1, 0.5, 1.0})
    CHECK(std::abs(radial_hat(k1, family(s + 1e-6), {1.2}) - radial_hat(k1, family(s), {1.2})) < 1e-5);
}

TEST_CASE("semigroup precondition") {
  const RadialFamily bad = [](double t) {
    return KRadialMeasure(k1, rayleigh_semigroup(HypergroupIndex(0.5), 2.0 * t * t));
  };
  CHECK_THROWS_AS(build_semigroup(k1, bad), DomainError);
}

TEST_CASE("cauchy semigroup") {
  const Semigroup S = build_semigroup(k1, cauchy_family(k1), {{0.5, 0.5}}, 1e-8);
  const MarkovKernelHandle P = S.kernel(0.5);
  const std::vector<Point> xs{{0.0}, {0.8}};
  const std::vector<Point> xis{{0.3}, {1.0}};
  CHECK(k_invariance_residual(P, xs, xis) < 1e-6);
  CHECK(P({0.8}, [](const Point&) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-8));
}
