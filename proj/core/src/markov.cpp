#include "dunkl/markov.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rank_one.hpp"

namespace dunkl {
namespace {

// Profile masses, merged into at most max_atoms equal-mass bins (mass and mean kept).
std::vector<Atom> radial_atoms(const RadialProfileMeasure& profile, std::size_t max_atoms) {
  std::vector<Atom> atoms;
  profile.data().for_each_mass([&](double r, double w) {
    if (w != 0.0) atoms.push_back({r, w});
  });
  if (atoms.size() <= max_atoms) return atoms;
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });
  const double share = profile.mass() / static_cast<double>(max_atoms);
  std::vector<Atom> bins;
  double mass = 0.0, moment = 0.0;
  for (const Atom& a : atoms) {
    mass += a.weight;
    moment += a.weight * a.point;
    if (mass >= share * (1.0 - 1e-12)) {
      bins.push_back({moment / mass, mass});
      mass = moment = 0.0;
    }
  }
  if (mass > 0.0) bins.push_back({moment / mass, mass});
  return bins;
}

double norm(const Point& x) {
  double r = 0.0;
  for (double v : x) r += v * v;
  return std::sqrt(r);
}

void check_dim(const MultiplicityVector& k, const Point& x, const char* what) {
  if (x.size() != k.dim()) throw DomainError(std::string(what) + ": dimension mismatch");
}

ComplexPoint minus_i(const Point& xi) {
  ComplexPoint z(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) z[i] = cplx(0.0, -xi[i]);
  return z;
}

}  // namespace

KRadialMeasure::KRadialMeasure(MultiplicityVector k, RadialProfileMeasure profile, HankelImage image,
                               RadialDensity density)
    : k_(std::move(k)),
      profile_(std::move(profile)),
      image_(std::move(image)),
      density_(std::move(density)) {
  if (std::abs(profile_.lambda() - k_.lambda()) > 1e-12)
    throw DomainError("k-radial measure: profile index does not match gamma + N/2 - 1");
  if (profile_.is_probability() && std::abs(profile_.mass() - 1.0) > 1e-10)
    throw DomainError("k-radial measure: probability profile must have mass 1");
  bool negative = false;
  profile_.data().for_each_mass([&](double r, double w) { negative = negative || r < 0.0 || w < 0.0; });
  if (negative) throw DomainError("k-radial measure: profile must be a positive measure on [0, inf)");
}

KRadialMeasure KRadialMeasure::point_mass_at_origin(const MultiplicityVector& k) {
  return KRadialMeasure(k, RadialProfileMeasure::point_mass(0.0, k.lambda()),
                        [](double) { return 1.0; });
}

double KRadialMeasure::hankel(double r) const {
  return image_ ? image_(r) : hankel_from_profile(r);
}

double KRadialMeasure::hankel_from_profile(double r) const {
  return hankel_transform(HypergroupIndex(profile_.lambda()), profile_, r);
}

double translate_measure(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                         const ScalarField& f, const TranslateOptions& options) {
  check_dim(k, x, "translate_measure");
  if (!(mu.k() == k)) throw DomainError("translate_measure: multiplicity mismatch");
  double acc = 0.0;
  for (const Atom& a : radial_atoms(mu.profile(), options.max_radial_atoms))
    acc += a.weight * (a.point == 0.0 ? f(x) : spherical_mean(k, f, x, a.point, options.mean));
  return acc;
}

cplx translate_measure(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                       const std::function<cplx(const Point&)>& f,
                       const TranslateOptions& options) {
  check_dim(k, x, "translate_measure");
  if (!(mu.k() == k)) throw DomainError("translate_measure: multiplicity mismatch");
  cplx acc = 0.0;
  for (const Atom& a : radial_atoms(mu.profile(), options.max_radial_atoms)) {
    if (a.point == 0.0) {
      acc += a.weight * f(x);
      continue;
    }
    acc += a.weight * sigma_measure(k, x, a.point, options.mean).integrate_complex(f);
  }
  return acc;
}

double translate_box_mass(const MultiplicityVector& k, const Point& x, const KRadialMeasure& mu,
                          const Point& lo, const Point& hi, int sphere_nodes) {
  check_dim(k, x, "translate_box_mass");
  check_dim(k, lo, "translate_box_mass");
  check_dim(k, hi, "translate_box_mass");
  const WeightedSphereRule sphere = orthant_rule(k, sphere_nodes);
  auto mass_at = [&](const Point& y, double r) {
    double prod = 1.0;
    for (std::size_t i = 0; i < k.dim() && prod != 0.0; ++i)
      prod *= sigma_interval_mass_rank1(RankOneMultiplicity(k[i]), x[i], r * y[i], lo[i], hi[i]);
    return prod;
  };
  double acc = 0.0;
  if (!mu.density()) {
    mu.profile().data().for_each_mass([&](double r, double w) {
      for (std::size_t j = 0; j < sphere.nodes.size(); ++j)
        acc += w * sphere.weights[j] * mass_at(sphere.nodes[j], r);
    });
    return acc;
  }
  const auto& density = mu.density();
  for (std::size_t j = 0; j < sphere.nodes.size(); ++j) {
    const Point& y = sphere.nodes[j];
    // The interval masses have kinks where a support endpoint of sigma_{x_i, r y_i} crosses lo_i or hi_i.
    std::vector<double> cuts{0.0};
    for (std::size_t i = 0; i < k.dim(); ++i) {
      if (y[i] <= 0.0) continue;
      for (double c : {lo[i], hi[i]})
        for (double b : {std::abs(x[i]) - std::abs(c), std::abs(c) - std::abs(x[i]),
                         std::abs(x[i]) + std::abs(c)})
          if (b > 0.0) cuts.push_back(b / y[i]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    auto g = [&](double r) { return density(r) * mass_at(y, r); };
    double part = 0.0;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
      part += integrate_adaptive(g, cuts[c], cuts[c + 1], 1e-8);
    part += integrate_adaptive_tail(g, cuts.back(), 1e-8);
    acc += sphere.weights[j] * part;
  }
  return acc;
}

double radial_hat(const MultiplicityVector& k, const KRadialMeasure& mu, const Point& xi) {
  check_dim(k, xi, "radial_hat");
  return mu.hankel(norm(xi));
}

KRadialMeasure convolve_k(const MultiplicityVector& k, const KRadialMeasure& mu,
                          const KRadialMeasure& nu, const ConvolveOptions& options) {
  if (!(mu.k() == k) || !(nu.k() == k)) throw DomainError("convolve_k: multiplicity mismatch");
  if (!mu.profile().is_probability() || !nu.profile().is_probability())
    throw DomainError("convolve_k: inputs must be probability measures");
  RadialProfileMeasure p =
      convolve_measures(HypergroupIndex(k.lambda()), mu.profile(), nu.profile(), options);
  return KRadialMeasure(k, std::move(p));
}

RadialFamily gaussian_family(const MultiplicityVector& k, int nodes) {
  return [k, nodes](double t) {
    if (t < 0.0) throw DomainError("gaussian_family: t must be >= 0");
    if (t == 0.0) return KRadialMeasure::point_mass_at_origin(k);
    const double lambda = k.lambda();
    return KRadialMeasure(
        k, rayleigh_semigroup(HypergroupIndex(lambda), t, nodes),
        [t](double r) { return std::exp(-t * r * r); },
        [lambda, t](double r) { return rayleigh_density(lambda, t, r); });
  };
}

double cauchy_density(double lambda, double t, double r) {
  if (!(t > 0.0)) throw DomainError("cauchy_density: t must be positive");
  if (r < 0.0) return 0.0;
  const double log_c = std::log(2.0) + boost::math::lgamma(lambda + 1.5) -
                       0.5 * std::log(std::numbers::pi) - boost::math::lgamma(lambda + 1.0);
  if (r == 0.0) return lambda > -0.5 ? 0.0 : std::exp(log_c) / t;
  return std::exp(log_c + std::log(t) + (2.0 * lambda + 1.0) * std::log(r) -
                  (lambda + 1.5) * std::log(t * t + r * r));
}

RadialFamily cauchy_family(const MultiplicityVector& k, int s_nodes, int r_nodes) {
  return [k, s_nodes, r_nodes](double t) {
    if (t < 0.0) throw DomainError("cauchy_family: t must be >= 0");
    if (t == 0.0) return KRadialMeasure::point_mass_at_origin(k);
    const RadialProfileMeasure rho = stable_half_subordinator(t, s_nodes);
    const double lambda = k.lambda();
    return KRadialMeasure(
        k, cauchy_semigroup(HypergroupIndex(lambda), t, s_nodes, r_nodes),
        [rho](double r) { return rho.integrate([r](double s) { return std::exp(-s * r * r); }); },
        [lambda, t](double r) { return cauchy_density(lambda, t, r); });
  };
}

RadialFamily gamma_subordinated_family(const MultiplicityVector& k, double theta, int s_nodes,
                                       int r_nodes) {
  if (!(theta > 0.0)) throw DomainError("gamma_subordinated_family: scale must be positive");
  return [k, theta, s_nodes, r_nodes](double t) {
    if (t < 0.0) throw DomainError("gamma_subordinated_family: t must be >= 0");
    if (t == 0.0) return KRadialMeasure::point_mass_at_origin(k);
    const QuadratureRule& rule = gauss_laguerre(s_nodes, t - 1.0);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < rule.size(); ++i) atoms.push_back({theta * rule.nodes[i], rule.weights[i] / total});
    const RadialProfileMeasure rho(MeasureData({}, {}, {}, std::move(atoms)), -0.5, true);
    const HypergroupIndex idx(k.lambda());
    return KRadialMeasure(
        k, subordinate(idx, [idx, r_nodes](double s) { return rayleigh_semigroup(idx, s, r_nodes); }, rho),
        [theta, t](double r) { return std::pow(1.0 + theta * r * r, -t); });
  };
}

MarkovKernelHandle::MarkovKernelHandle(MultiplicityVector k, KRadialMeasure mu,
                                       TranslateOptions options)
    : k_(std::move(k)), mu_(std::move(mu)), options_(options) {
  if (!(mu_.k() == k_)) throw DomainError("markov kernel: multiplicity mismatch");
  if (!mu_.profile().is_probability())
    throw DomainError("markov kernel: generating measure must be a probability");
}

double MarkovKernelHandle::operator()(const Point& x, const ScalarField& f) const {
  return translate_measure(k_, x, mu_, f, options_);
}

cplx MarkovKernelHandle::transform(const Point& x, const Point& xi) const {
  check_dim(k_, xi, "markov kernel transform");
  const ComplexPoint z = minus_i(xi);
  return translate_measure(
      k_, x, mu_, [&](const Point& eta) { return dunkl_kernel(k_, z, to_complex(eta)); }, options_);
}

double MarkovKernelHandle::box_mass(const Point& x, const Point& lo, const Point& hi) const {
  return translate_box_mass(k_, x, mu_, lo, hi, 2 * options_.mean.sphere_nodes);
}

Semigroup::Semigroup(MultiplicityVector k, RadialFamily family, TranslateOptions options)
    : k_(std::move(k)), family_(std::move(family)), options_(options) {}

MarkovKernelHandle Semigroup::kernel(double t) const {
  return MarkovKernelHandle(k_, family_(t), options_);
}

Semigroup build_semigroup(const MultiplicityVector& k, RadialFamily family,
                          const std::vector<std::pair<double, double>>& check_pairs, double tol,
                          const TranslateOptions& options) {
  if (!family) throw DomainError("build_semigroup: empty family");
  const KRadialMeasure zero = family(0.0);
  if (!(zero.k() == k)) throw DomainError("build_semigroup: multiplicity mismatch");
  const auto& z = zero.profile().data();
  if (z.num_masses() == 0 || std::abs(z.mass() - 1.0) > tol || z.mass_outside(0.0, 0.0) > tol)
    throw DomainError("build_semigroup: family at t = 0 is not delta_0");
  for (const auto& [s, t] : check_pairs) {
    const KRadialMeasure ms = family(s), mt = family(t), mst = family(s + t);
    for (int j = 0; j <= 20; ++j) {
      const double r = 0.25 * j;
      const double res = std::abs(ms.hankel(r) * mt.hankel(r) - mst.hankel(r));
      if (res > tol)
        throw DomainError("build_semigroup: family violates the semigroup law at s = " +
                          std::to_string(s) + ", t = " + std::to_string(t));
    }
  }
  return Semigroup(k, std::move(family), options);
}

double k_invariance_residual(const MarkovKernelHandle& P, const std::vector<Point>& xs,
                             const std::vector<Point>& xis) {
  const MultiplicityVector& k = P.k();
  const Point origin(k.dim(), 0.0);
  double worst = 0.0;
  for (const Point& xi : xis) {
    const cplx base = P.transform(origin, xi);
    if (std::abs(base) <= 1e-3) continue;
    for (const Point& x : xs) {
      const cplx expected = dunkl_kernel(k, minus_i(x), to_complex(xi));
      worst = std::max(worst, std::abs(P.transform(x, xi) / base - expected));
    }
  }
  return worst;
}

double semigroup_law_residual(const Semigroup& S, double s, double t, const std::vector<Point>& xs,
                              const std::vector<Point>& xis) {
  const MarkovKernelHandle Ps = S.kernel(s), Pt = S.kernel(t), Pst = S.kernel(s + t);
  const Point origin(S.k().dim(), 0.0);
  double worst = 0.0;
  for (const Point& xi : xis) {
    const cplx t_hat = Pt.transform(origin, xi);
    for (const Point& x : xs)
      worst = std::max(worst, std::abs(t_hat * Ps.transform(x, xi) - Pst.transform(x, xi)));
  }
  return worst;
}

}  // namespace dunkl
