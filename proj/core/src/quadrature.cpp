#include "dunkl/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "dunkl/error.hpp"

namespace dunkl {
namespace {

// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the recurrence.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                            double mu0) {
  const Eigen::Index n = diag.size();
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    jacobi(i, i) = diag(i);
    if (i + 1 < n) jacobi(i, i + 1) = jacobi(i + 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) throw NumericalError("Golub-Welsch eigensolver failed");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.nodes[i] = solver.eigenvalues()(i);
    const double v0 = solver.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule build_jacobi(int n, double a, double b) {
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  const double ab = a + b;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      diag(k) = (b - a) / (ab + 2.0);
    } else {
      const double s = 2.0 * k + ab;
      diag(k) = (b * b - a * a) / (s * (s + 2.0));
    }
  }
  for (int k = 1; k < n; ++k) {
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      const double s = 2.0 * k + ab;
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off(k - 1) = std::sqrt(beta);
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + boost::math::lgamma(a + 1.0) +
                              boost::math::lgamma(b + 1.0) - boost::math::lgamma(ab + 2.0));
  return golub_welsch(diag, off, mu0);
}

QuadratureRule build_laguerre(int n, double a) {
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + a + 1.0;
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k * (k + a));
  return golub_welsch(diag, off, std::exp(boost::math::lgamma(a + 1.0)));
}

using RuleKey = std::tuple<int, int, double, double>;

const QuadratureRule& cached(const RuleKey& key) {
  static std::mutex mutex;
  static std::map<RuleKey, QuadratureRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const auto [kind, n, a, b] = key;
  QuadratureRule rule = kind == 0 ? build_jacobi(n, a, b) : build_laguerre(n, a);
  return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
  return acc;
}

QuadratureRule QuadratureRule::mapped(double a, double b, double scale) const {
  QuadratureRule out;
  out.nodes.resize(size());
  out.weights.resize(size());
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < size(); ++i) {
    out.nodes[i] = mid + half * nodes[i];
    out.weights[i] = weights[i] * half * scale;
  }
  return out;
}

const QuadratureRule& gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
  return cached({0, n, a, b});
}

const QuadratureRule& gauss_laguerre(int n, double a) {
  if (n < 1) throw DomainError("gauss_laguerre: need at least one node");
  if (!(a > -1.0)) throw DomainError("gauss_laguerre: exponent must exceed -1");
  return cached({1, n, a, 0.0});
}

double integrate_jacobi(const std::function<double(double)>& f, double lo, double hi,
                        double a, double b, int n) {
  // (s-lo)^a (hi-s)^b with s = mid + half*u: (1+u)^a (1-u)^b half^{a+b}.
  const QuadratureRule& rule = gauss_jacobi(n, b, a);
  const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * std::pow(half, a + b + 1.0);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  double err = 0.0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 25, tol, &err);
  if (!(err <= tol * std::max(1.0, std::abs(val)) * 10.0))
    throw NumericalError("integrate_adaptive: tolerance not met");
  return val;
}

double integrate_adaptive_tail(const std::function<double(double)>& f, double a,
                               double tol) {
  double err = 0.0;
  const double val = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, std::numeric_limits<double>::infinity(), 25, tol, &err);
  if (!(err <= tol * std::max(1.0, std::abs(val)) * 10.0))
    throw NumericalError("integrate_adaptive_tail: tolerance not met");
  return val;
}

}  // namespace dunkl
