#include "dunkl/dunkl_core.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <json.hpp>
#include <map>
#include <mutex>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/rank_one.hpp"

namespace dunkl {
namespace {

constexpr double kSingularThreshold = 1e-7;

Point shifted(const Point& x, std::size_t i, double d) {
  Point y = x;
  y[i] += d;
  return y;
}

Point with_coordinate(const Point& x, std::size_t i, double v) {
  Point y = x;
  y[i] = v;
  return y;
}

void check_dim(const MultiplicityVector& k, std::size_t n, const char* what) {
  if (n != k.dim()) throw DomainError(std::string(what) + ": dimension mismatch");
}

// lim_{s->0} (f(.., s, ..) - f(.., -s, ..)) / s, Richardson-extrapolated.
double odd_quotient_limit(const ScalarField& f, const Point& x, std::size_t i, double h) {
  auto g = [&](double s) {
    return (f(with_coordinate(x, i, s)) - f(with_coordinate(x, i, -s))) / s;
  };
  return (4.0 * g(0.5 * h) - g(h)) / 3.0;
}

// Second derivative at x_i = 0 of the even part of f in x_i, Richardson-extrapolated.
double even_second_derivative(const ScalarField& f, const Point& x, std::size_t i, double h) {
  const double f0 = f(with_coordinate(x, i, 0.0));
  auto g = [&](double s) {
    const double e = 0.5 * (f(with_coordinate(x, i, s)) + f(with_coordinate(x, i, -s)));
    return 2.0 * (e - f0) / (s * s);
  };
  return (4.0 * g(0.5 * h) - g(h)) / 3.0;
}

double second_difference(const ScalarField& f, const Point& x, std::size_t i, double h, double f0) {
  return (f(shifted(x, i, h)) - 2.0 * f0 + f(shifted(x, i, -h))) / (h * h);
}

double first_difference(const ScalarField& f, const Point& x, std::size_t i, double h) {
  return (f(shifted(x, i, h)) - f(shifted(x, i, -h))) / (2.0 * h);
}

double sinhc(double u) {
  if (std::abs(u) < 1e-4) return 1.0 + u * u / 6.0 * (1.0 + u * u / 20.0);
  return std::sinh(u) / u;
}

}  // namespace

MultiplicityVector::MultiplicityVector(std::vector<double> k) : k_(std::move(k)), gamma_(0.0) {
  if (k_.empty()) throw DomainError("multiplicity vector must have N >= 1");
  for (double v : k_) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError("multiplicities must be finite and >= 0");
    gamma_ += v;
  }
}

MultiplicityVector MultiplicityVector::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto& kj = j.at("k");
    if (kj.is_number()) {
      const int n = j.at("N").get<int>();
      if (n < 1) throw DomainError("multiplicity JSON: N must be >= 1");
      return MultiplicityVector(std::vector<double>(static_cast<std::size_t>(n), kj.get<double>()));
    }
    auto k = kj.get<std::vector<double>>();
    if (j.contains("N") && j.at("N").get<std::size_t>() != k.size())
      throw DomainError("multiplicity JSON: N does not match length of k");
    return MultiplicityVector(std::move(k));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("multiplicity JSON: ") + e.what());
  }
}

std::string MultiplicityVector::to_json() const {
  return nlohmann::json{{"N", k_.size()}, {"k", k_}}.dump();
}

GroupElement::GroupElement(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_)
    if (s != 1 && s != -1) throw DomainError("group element signs must be +1 or -1");
}

GroupElement GroupElement::identity(std::size_t n) { return GroupElement(std::vector<int>(n, 1)); }

GroupElement GroupElement::from_bits(std::size_t n, unsigned long bits) {
  std::vector<int> s(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((bits >> i) & 1UL) s[i] = -1;
  return GroupElement(std::move(s));
}

int GroupElement::det() const {
  int d = 1;
  for (int s : signs_) d *= s;
  return d;
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  if (other.signs_.size() != signs_.size()) throw DomainError("group elements of different rank");
  std::vector<int> s(signs_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = signs_[i] * other.signs_[i];
  return GroupElement(std::move(s));
}

Point GroupElement::apply(const Point& x) const {
  if (x.size() != signs_.size()) throw DomainError("group action: dimension mismatch");
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = signs_[i] * x[i];
  return y;
}

ComplexPoint GroupElement::apply(const ComplexPoint& x) const {
  if (x.size() != signs_.size()) throw DomainError("group action: dimension mismatch");
  ComplexPoint y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<double>(signs_[i]) * x[i];
  return y;
}

std::vector<GroupElement> group_elements(std::size_t n) {
  if (n > 20) throw DomainError("group_elements: rank too large to enumerate");
  std::vector<GroupElement> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned long b = 0; b < (1UL << n); ++b) out.push_back(GroupElement::from_bits(n, b));
  return out;
}

double weight(const MultiplicityVector& k, const Point& x) {
  check_dim(k, x.size(), "weight");
  double w = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (k[i] == 0.0) continue;
    w *= std::pow(std::numbers::sqrt2 * std::abs(x[i]), 2.0 * k[i]);
  }
  return w;
}

NormalizationConstants constants(const MultiplicityVector& k) {
  static std::mutex mutex;
  static std::map<std::vector<double>, NormalizationConstants> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k.values()); it != cache.end()) return it->second;
  }
  double log_c = 0.0;
  for (double ki : k.values())
    log_c += (2.0 * ki + 0.5) * std::numbers::ln2 + boost::math::lgamma(ki + 0.5);
  const double lambda = k.lambda();
  const double log_d = log_c - lambda * std::numbers::ln2 - boost::math::lgamma(lambda + 1.0);
  const NormalizationConstants result{std::exp(log_c), std::exp(log_d)};
  std::lock_guard lock(mutex);
  cache.emplace(k.values(), result);
  return result;
}

double dunkl_operator(const MultiplicityVector& k, const Point& xi, const ScalarField& f,
                      const Point& x, double h) {
  check_dim(k, x.size(), "dunkl_operator");
  check_dim(k, xi.size(), "dunkl_operator");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (xi[i] == 0.0) continue;
    acc += xi[i] * first_difference(f, x, i, h);
    if (k[i] == 0.0) continue;
    if (std::abs(x[i]) < kSingularThreshold) {
      acc += k[i] * xi[i] * odd_quotient_limit(f, x, i, h);
    } else {
      Point flipped = x;
      flipped[i] = -x[i];
      acc += k[i] * xi[i] * (f(x) - f(flipped)) / x[i];
    }
  }
  return acc;
}

double lk_operator(const MultiplicityVector& k, const ScalarField& f, const Point& x, double h) {
  check_dim(k, x.size(), "lk_operator");
  const double f0 = f(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += second_difference(f, x, i, h, f0);
    if (k[i] == 0.0) continue;
    if (std::abs(x[i]) < h)
      acc += 2.0 * k[i] * even_second_derivative(f, x, i, h);
    else
      acc += 2.0 * k[i] * first_difference(f, x, i, h) / x[i];
  }
  return acc;
}

double dunkl_laplacian(const MultiplicityVector& k, const ScalarField& f, const Point& x,
                       double h) {
  check_dim(k, x.size(), "dunkl_laplacian");
  const double f0 = f(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += second_difference(f, x, i, h, f0);
    if (k[i] == 0.0) continue;
    if (std::abs(x[i]) < h) {
      acc += 2.0 * k[i] * even_second_derivative(f, x, i, h);
    } else {
      Point flipped = x;
      flipped[i] = -x[i];
      acc += 2.0 * k[i] * first_difference(f, x, i, h) / x[i] -
             k[i] * (f0 - f(flipped)) / (x[i] * x[i]);
    }
  }
  return acc;
}

cplx dunkl_kernel(const MultiplicityVector& k, const ComplexPoint& x, const ComplexPoint& y) {
  check_dim(k, x.size(), "dunkl_kernel");
  check_dim(k, y.size(), "dunkl_kernel");
  cplx e = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    e *= dunkl_kernel_rank1(RankOneMultiplicity(k[i]), x[i], y[i]);
  return e;
}

double dunkl_kernel(const MultiplicityVector& k, const Point& x, const Point& y) {
  return dunkl_kernel(k, to_complex(x), to_complex(y)).real();
}

cplx generalized_bessel(const MultiplicityVector& k, const ComplexPoint& x, const ComplexPoint& y) {
  check_dim(k, x.size(), "generalized_bessel");
  // The average over Z_2^N factorizes into coordinatewise averages.
  cplx j = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const RankOneMultiplicity ki(k[i]);
    j *= 0.5 * (dunkl_kernel_rank1(ki, x[i], y[i]) + dunkl_kernel_rank1(ki, -x[i], y[i]));
  }
  return j;
}

SignedLineMeasure intertwiner_measure_1d(double k, double x, int nodes) {
  if (!(k >= 0.0)) throw DomainError("intertwiner_measure_1d: k must be >= 0");
  if (k == 0.0 || x == 0.0) return SignedLineMeasure::point_mass(x);
  // Density b (1+u)^k (1-u)^{k-1} in u = xi / x.
  const QuadratureRule& rule = gauss_jacobi(nodes, k - 1.0, k);
  const double b = std::exp(boost::math::lgamma(k + 0.5) - 0.5 * std::log(std::numbers::pi) -
                            boost::math::lgamma(k));
  const std::size_t n = rule.size();
  std::vector<double> grid(n), density(n), weights(n);
  double total = 0.0;
  for (double w : rule.weights) total += w;
  const double ax = std::abs(x);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rule.nodes[i];
    const double d = b * std::pow(1.0 + u, k) * std::pow(1.0 - u, k - 1.0) / ax;
    const double mass = rule.weights[i] / total;
    const std::size_t slot = x > 0.0 ? i : n - 1 - i;
    grid[slot] = x * u;
    density[slot] = d;
    weights[slot] = mass / d;
  }
  const double mass_error = std::abs(b * total - 1.0);
  if (mass_error > 1e-8)
    throw NumericalError("intertwiner_measure_1d: normalization mismatch");
  return SignedLineMeasure(MeasureData(std::move(grid), std::move(density), std::move(weights), {}),
                           true);
}

double complex_case_bessel_J1(const Point& x, const Point& lam, ComplexGroup group) {
  const std::size_t n = group == ComplexGroup::A1 ? 1 : 2;
  if (x.size() != n || lam.size() != n)
    throw DomainError("complex_case_bessel_J1: point dimension does not match the group");
  double pi_product = 1.0;
  for (std::size_t i = 0; i < n; ++i) pi_product *= 2.0 * x[i] * lam[i];
  // c is the reciprocal of lim_{x->0} of the alternating quotient; each factor
  // of that quotient is sinh(u)/u, so the limit is sinhc(0)^n.
  double limit = 1.0;
  for (std::size_t i = 0; i < n; ++i) limit *= sinhc(0.0);
  const double c = 1.0 / limit;
  bool near_zero = false;
  for (std::size_t i = 0; i < n; ++i) near_zero = near_zero || std::abs(x[i] * lam[i]) < 1e-3;
  if (near_zero) {
    double value = 1.0;
    for (std::size_t i = 0; i < n; ++i) value *= sinhc(x[i] * lam[i]);
    return c * value;
  }
  double alternating = 0.0;
  for (const GroupElement& g : group_elements(n)) {
    const Point glam = g.apply(lam);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += x[i] * glam[i];
    alternating += g.det() * std::exp(dot);
  }
  return c * alternating / pi_product;
}

ComplexPoint to_complex(const Point& x) {
  ComplexPoint z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i];
  return z;
}

}  // namespace dunkl
