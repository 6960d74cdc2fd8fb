#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

struct Atom {
  double point;
  double weight;
};

/// Absolutely continuous part sampled at quadrature nodes plus point masses.
///
/// The density is stored at `grid` together with the quadrature weights that
/// integrate it: the mass carried by node i is density[i] * weights[i]. For
/// densities with integrable endpoint singularities the grid is a Jacobi-type
/// rule, so nodes never sit on a singularity.
class MeasureData {
 public:
  MeasureData() = default;
  MeasureData(std::vector<double> grid, std::vector<double> density,
              std::vector<double> weights, std::vector<Atom> atoms);

  const std::vector<double>& grid() const noexcept { return grid_; }
  const std::vector<double>& density() const noexcept { return density_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  double mass() const;
  double total_variation() const;
  double integrate(const std::function<double(double)>& f) const;

  /// Visits every (point, mass) pair of the discretized measure.
  template <class F>
  void for_each_mass(F&& f) const {
    for (std::size_t i = 0; i < grid_.size(); ++i) f(grid_[i], density_[i] * weights_[i]);
    for (const Atom& a : atoms_) f(a.point, a.weight);
  }

  /// Mass outside [lo, hi].
  double mass_outside(double lo, double hi) const;

  std::size_t num_masses() const noexcept { return grid_.size() + atoms_.size(); }

 private:
  std::vector<double> grid_;
  std::vector<double> density_;
  std::vector<double> weights_;
  std::vector<Atom> atoms_;
};

/// Collapses the masses of `data` onto at most `max_atoms` equal-width bins;
/// each bin keeps its mass and its mass-weighted mean.
std::vector<Atom> compress_masses(const MeasureData& data, std::size_t max_atoms);

/// Finite measure on R_+ (element of M_b(R_+)), tagged with the hypergroup
/// index it is meant to be convolved under.
class RadialProfileMeasure {
 public:
  RadialProfileMeasure(MeasureData data, double lambda, bool probability);

  static RadialProfileMeasure point_mass(double r, double lambda);

  const MeasureData& data() const noexcept { return data_; }
  double lambda() const noexcept { return lambda_; }
  bool is_probability() const noexcept { return probability_; }
  double mass() const { return data_.mass(); }
  double integrate(const std::function<double(double)>& f) const { return data_.integrate(f); }

  std::string to_json() const;
  static RadialProfileMeasure from_json(const std::string& text);

 private:
  MeasureData data_;
  double lambda_;
  bool probability_;
};

/// Finite signed measure on R (element of M_b(R)).
class SignedLineMeasure {
 public:
  SignedLineMeasure(MeasureData data, bool probability);

  static SignedLineMeasure point_mass(double x);

  const MeasureData& data() const noexcept { return data_; }
  bool is_probability() const noexcept { return probability_; }
  double mass() const { return data_.mass(); }
  double total_variation() const { return data_.total_variation(); }
  double integrate(const std::function<double(double)>& f) const { return data_.integrate(f); }

  /// Mirror image under x -> -x.
  SignedLineMeasure reflected() const;

  std::string to_json(std::optional<double> k = std::nullopt) const;
  static SignedLineMeasure from_json(const std::string& text);

 private:
  MeasureData data_;
  bool probability_;
};

}  // namespace dunkl
