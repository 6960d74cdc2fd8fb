#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/special_fn.hpp"

using namespace dunkl;

namespace {

// Truncated power series of j_alpha, used as an independent oracle.
cplx series_oracle(double alpha, cplx z, int terms = 60) {
  cplx sum = 0.0, term = 1.0;
  for (int n = 0; n < terms; ++n) {
    sum += term;
    term *= -(z * z / 4.0) / (static_cast<double>(n + 1) * (n + 1 + alpha));
  }
  return sum;
}

double hypergeometric_oracle(int n, double lambda, double t) {
  double sum = 0.0, term = 1.0;
  const double x = (1.0 - t) / 2.0;
  for (int j = 0; j <= n; ++j) {
    sum += term;
    term *= (-n + j) * (n + 2 * lambda + j) / ((lambda + 0.5 + j) * (j + 1)) * x;
  }
  return sum;
}

}  // namespace

TEST_CASE("bessel_j basic values") {
  CHECK(bessel_j(BesselIndex(2.3), cplx(0.0, 0.0)) == cplx(1.0, 0.0));
  CHECK(std::abs(bessel_j(BesselIndex(0.5), std::numbers::pi)) < 1e-15);
  const cplx v = bessel_j(BesselIndex(0.5), cplx(0.0, 1.0));
  CHECK(v.real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(std::abs(v.imag()) < 1e-15);
  CHECK(std::abs(v - series_oracle(0.5, cplx(0.0, 1.0))) < 1e-14);
}

TEST_CASE("bessel_j matches half-integer closed forms") {
  double worst = 0.0;
  for (int i = 1; i <= 400; ++i) {
    const double z = 0.05 * i;
    const double ref[3] = {std::cos(z), std::sin(z) / z, 3.0 * (std::sin(z) - z * std::cos(z)) / (z * z * z)};
    const double alphas[3] = {-0.5, 0.5, 1.5};
    for (int a = 0; a < 3; ++a) {
      // The third closed form cancels badly near zero.
      if (a == 2 && z < 0.5) continue;
      const double v = bessel_j(BesselIndex(alphas[a]), z);
      worst = std::max(worst, std::abs(v - ref[a]) / std::max(std::abs(ref[a]), 1e-3));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("bessel_j is even, bounded and agrees with the series on complex inputs") {
  for (double alpha : {-0.5, 0.0, 0.7, 2.5}) {
    for (double x : {0.3, 1.7, 6.0, 11.5, 25.0}) {
      const double v = bessel_j(BesselIndex(alpha), x);
      CHECK(v == doctest::Approx(bessel_j(BesselIndex(alpha), -x)).epsilon(1e-15));
      CHECK(std::abs(v) <= 1.0 + 1e-15);
    }
    for (cplx z : {cplx(1.0, 2.0), cplx(-3.0, 0.5), cplx(0.0, 4.0)}) {
      const cplx ref = series_oracle(alpha, z);
      CHECK(std::abs(bessel_j(BesselIndex(alpha), z) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST_CASE("bessel_j rejects invalid input") {
  CHECK_THROWS_AS(BesselIndex(-0.6), DomainError);
  CHECK_THROWS_AS(bessel_j(BesselIndex(0.5), cplx(NAN, 0.0)), DomainError);
}

TEST_CASE("eigenfunction of the singular Sturm-Liouville operator") {
  for (double alpha : {0.0, 0.5, 1.5}) {
    const double z = 1.3, t = 0.9;
    auto u = [&](double s) { return bessel_j(BesselIndex(alpha), s * z); };
    const double e1 = std::abs(sturm_liouville_fd(u, alpha, t, 1e-2) + z * z * u(t));
    const double e2 = std::abs(sturm_liouville_fd(u, alpha, t, 5e-3) + z * z * u(t));
    CHECK(e2 < 1e-4);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  }
}

TEST_CASE("gegenbauer values and recurrence consistency") {
  CHECK(gegenbauer({0, 2.0}, 0.3) == 1.0);
  CHECK(gegenbauer({5, 1.5}, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(gegenbauer({1, 0.7}, 0.4) == doctest::Approx(0.4).epsilon(1e-15));
  double worst = 0.0;
  for (int n = 0; n <= 30; ++n)
    for (double lambda : {0.0, 0.5, 1.0, 2.5, 5.0})
      for (double t : {-1.0, -0.7, -0.2, 0.0, 0.35, 0.9, 1.0}) {
        const double r = gegenbauer({n, lambda}, t);
        worst = std::max(worst, std::abs(r - gegenbauer_hypergeometric({n, lambda}, t)));
        CHECK(std::abs(r) <= 1.0 + 1e-12);
      }
  CHECK(worst < 1e-10);
  CHECK(std::abs(gegenbauer({4, 1.2}, 0.3) - hypergeometric_oracle(4, 1.2, 0.3)) < 1e-14);
  CHECK_THROWS_AS(gegenbauer({-1, 1.0}, 0.0), DomainError);
  CHECK_THROWS_AS(gegenbauer({2, -0.1}, 0.0), DomainError);
}

TEST_CASE("gamma and pochhammer helpers") {
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK(pochhammer(0.5, 3) == doctest::Approx(0.5 * 1.5 * 2.5).epsilon(1e-15));
  CHECK(pochhammer(0.0, 2) == 0.0);
  CHECK(std::exp(log_pochhammer(2.5, 40)) == doctest::Approx(std::tgamma(42.5) / std::tgamma(2.5)).epsilon(1e-12));
  CHECK(series_coefficient(1.0, 3) == doctest::Approx(std::tgamma(2.0) / (8.0 * std::tgamma(5.0))).epsilon(1e-14));
}

TEST_CASE("riemann_liouville transform") {
  for (double alpha : {-0.25, 0.3, 1.0, 2.5}) {
    CHECK(riemann_liouville([](double) { return 1.0; }, alpha, 1.7) == doctest::Approx(1.0).epsilon(1e-12));
    const double t = 1.4;
    CHECK(riemann_liouville([](double s) { return s * s; }, alpha, t) ==
          doctest::Approx(t * t / (2.0 * (alpha + 1.0))).epsilon(1e-12));
    const double z = 2.2;
    CHECK(riemann_liouville([&](double s) { return std::cos(z * s); }, alpha, t) ==
          doctest::Approx(bessel_j(BesselIndex(alpha), z * t)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(riemann_liouville([](double) { return 1.0; }, -0.5, 1.0), DomainError);
}

TEST_CASE("riemann_liouville intertwines d2/dt2 with the Sturm-Liouville operator") {
  const double alpha = 0.8, t = 0.7;
  auto f = [](double s) { return std::exp(-s * s) * std::cos(s); };
  auto f2 = [](double s) {
    // second derivative of exp(-s^2) cos(s)
    return std::exp(-s * s) * ((4.0 * s * s - 3.0) * std::cos(s) + 4.0 * s * std::sin(s));
  };
  auto u = [&](double s) { return riemann_liouville(f, alpha, s); };
  const double lhs = riemann_liouville(f2, alpha, t);
  CHECK(std::abs(sturm_liouville_fd(u, alpha, t, 1e-3) - lhs) < 1e-5);
}

TEST_CASE("bessel_i_ratio") {
  CHECK(bessel_i_ratio(0.5, 0.0) == 0.0);
  // I_{3/2}/I_{1/2} = coth(u) - 1/u
  for (double u : {0.01, 0.5, 3.0, 40.0, 700.0, 5000.0})
    CHECK(bessel_i_ratio(0.5, u) == doctest::Approx(1.0 / std::tanh(u) - 1.0 / u).epsilon(1e-12));
  // I_{1/2}/I_{-1/2} = tanh(u)
  for (double u : {0.2, 2.0, 650.0}) CHECK(bessel_i_ratio(-0.5, u) == doctest::Approx(std::tanh(u)).epsilon(1e-12));
}
