#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dunkl/measures.hpp"
#include "dunkl/special_fn.hpp"

namespace dunkl {

using Point = std::vector<double>;
using ComplexPoint = std::vector<cplx>;
using ScalarField = std::function<double(const Point&)>;

/// Multiplicity function on R_+ = {sqrt(2) e_i} for the group Z_2^N.
class MultiplicityVector {
 public:
  explicit MultiplicityVector(std::vector<double> k);

  /// Parses {"N": n, "k": [...]}; a scalar "k" is broadcast to all N coordinates.
  static MultiplicityVector from_json(const std::string& text);
  std::string to_json() const;

  std::size_t dim() const noexcept { return k_.size(); }
  double operator[](std::size_t i) const { return k_[i]; }
  const std::vector<double>& values() const noexcept { return k_; }
  double gamma() const noexcept { return gamma_; }
  double lambda() const noexcept { return gamma_ + 0.5 * static_cast<double>(k_.size()) - 1.0; }

  bool operator==(const MultiplicityVector& other) const { return k_ == other.k_; }

 private:
  std::vector<double> k_;
  double gamma_;
};

/// Element of Z_2^N acting by coordinate sign flips.
class GroupElement {
 public:
  explicit GroupElement(std::vector<int> signs);
  static GroupElement identity(std::size_t n);
  /// The flip pattern whose bit i marks a sign change in coordinate i.
  static GroupElement from_bits(std::size_t n, unsigned long bits);

  const std::vector<int>& signs() const noexcept { return signs_; }
  int det() const;
  GroupElement operator*(const GroupElement& other) const;
  Point apply(const Point& x) const;
  ComplexPoint apply(const ComplexPoint& x) const;
  bool operator==(const GroupElement& other) const { return signs_ == other.signs_; }

 private:
  std::vector<int> signs_;
};

/// All 2^N elements, identity first.
std::vector<GroupElement> group_elements(std::size_t n);

struct NormalizationConstants {
  double c_k;
  double d_k;
};

/// w_k(x) = prod_i |sqrt(2) x_i|^{2 k_i}.
double weight(const MultiplicityVector& k, const Point& x);

/// c_k = int exp(-|x|^2/2) w_k(x) dx and d_k = c_k / (2^lambda Gamma(lambda+1)); memoized.
NormalizationConstants constants(const MultiplicityVector& k);

/// T_xi(k) f(x) with a central difference of step h for the directional derivative.
double dunkl_operator(const MultiplicityVector& k, const Point& xi, const ScalarField& f,
                      const Point& x, double h = 1e-4);

/// Delta_k f(x) with second differences of step h.
double dunkl_laplacian(const MultiplicityVector& k, const ScalarField& f, const Point& x,
                       double h = 1e-4);

/// L_k f(x) = Delta f + 2 sum_i k_i f_{x_i} / x_i, the reflection-free part of Delta_k.
double lk_operator(const MultiplicityVector& k, const ScalarField& f, const Point& x,
                   double h = 1e-4);

/// E_k(x, y) = prod_i E_{k_i}(x_i, y_i).
cplx dunkl_kernel(const MultiplicityVector& k, const ComplexPoint& x, const ComplexPoint& y);
double dunkl_kernel(const MultiplicityVector& k, const Point& x, const Point& y);

/// J_k(x, y) = 2^{-N} sum_g E_k(gx, y).
cplx generalized_bessel(const MultiplicityVector& k, const ComplexPoint& x, const ComplexPoint& y);

/// The rank-one intertwining measure mu_x^k, a probability measure on [-|x|, |x|].
SignedLineMeasure intertwiner_measure_1d(double k, double x, int nodes = 48);

enum class ComplexGroup { A1, A1xA1 };

/// J_1(x, lam) = c sum_g det(g) e^{<x, g lam>} / (pi(x) pi(lam)), c fixed by J_1(0, lam) = 1.
double complex_case_bessel_J1(const Point& x, const Point& lam, ComplexGroup group);

ComplexPoint to_complex(const Point& x);

}  // namespace dunkl
