#include "dunkl/measures.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "dunkl/error.hpp"

namespace dunkl {
namespace {

using nlohmann::json;

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = grid[i + 1] - grid[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

json data_to_json(const MeasureData& d) {
  json atoms = json::array();
  for (const Atom& a : d.atoms()) atoms.push_back({a.point, a.weight});
  return json{{"grid", d.grid()},
              {"density", d.density()},
              {"weights", d.weights()},
              {"atoms", atoms}};
}

MeasureData data_from_json(const json& j) {
  try {
    auto grid = j.value("grid", std::vector<double>{});
    auto density = j.value("density", std::vector<double>{});
    std::vector<double> weights =
        j.contains("weights") ? j.at("weights").get<std::vector<double>>() : trapezoid_weights(grid);
    std::vector<Atom> atoms;
    for (const auto& a : j.value("atoms", json::array())) {
      if (!a.is_array() || a.size() != 2) throw DomainError("measure JSON: atoms must be [r, w] pairs");
      atoms.push_back({a[0].get<double>(), a[1].get<double>()});
    }
    return MeasureData(std::move(grid), std::move(density), std::move(weights), std::move(atoms));
  } catch (const json::exception& e) {
    throw DomainError(std::string("measure JSON: ") + e.what());
  }
}

}  // namespace

std::vector<Atom> compress_masses(const MeasureData& data, std::size_t max_atoms) {
  std::vector<Atom> masses;
  masses.reserve(data.num_masses());
  data.for_each_mass([&](double x, double w) {
    if (w != 0.0) masses.push_back({x, w});
  });
  if (masses.size() <= max_atoms) return masses;
  auto [lo_it, hi_it] = std::minmax_element(
      masses.begin(), masses.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });
  const double lo = lo_it->point, hi = hi_it->point;
  const double width = (hi - lo) / static_cast<double>(max_atoms);
  std::vector<double> mass(max_atoms, 0.0), moment(max_atoms, 0.0);
  for (const Atom& a : masses) {
    auto bin = static_cast<std::size_t>((a.point - lo) / width);
    bin = std::min(bin, max_atoms - 1);
    mass[bin] += a.weight;
    moment[bin] += a.weight * a.point;
  }
  std::vector<Atom> out;
  for (std::size_t b = 0; b < max_atoms; ++b) {
    if (mass[b] == 0.0) continue;
    double centre = moment[b] / mass[b];
    const double left = lo + b * width;
    if (!(centre >= left && centre <= left + width)) centre = left + 0.5 * width;
    out.push_back({centre, mass[b]});
  }
  return out;
}

MeasureData::MeasureData(std::vector<double> grid, std::vector<double> density,
                         std::vector<double> weights, std::vector<Atom> atoms)
    : grid_(std::move(grid)),
      density_(std::move(density)),
      weights_(std::move(weights)),
      atoms_(std::move(atoms)) {
  if (grid_.size() != density_.size() || grid_.size() != weights_.size())
    throw DomainError("measure: grid, density and weights must have equal length");
  for (std::size_t i = 1; i < grid_.size(); ++i)
    if (!(grid_[i] > grid_[i - 1])) throw DomainError("measure: grid must be strictly increasing");
  for (double v : density_)
    if (!std::isfinite(v)) throw DomainError("measure: density must be finite at grid nodes");
  for (const Atom& a : atoms_)
    if (!std::isfinite(a.point) || !std::isfinite(a.weight))
      throw DomainError("measure: atoms must be finite");
}

double MeasureData::mass() const {
  double m = 0.0;
  for_each_mass([&](double, double w) { m += w; });
  return m;
}

double MeasureData::total_variation() const {
  double m = 0.0;
  for_each_mass([&](double, double w) { m += std::abs(w); });
  return m;
}

double MeasureData::integrate(const std::function<double(double)>& f) const {
  double acc = 0.0;
  for_each_mass([&](double x, double w) { acc += w * f(x); });
  return acc;
}

double MeasureData::mass_outside(double lo, double hi) const {
  double m = 0.0;
  for_each_mass([&](double x, double w) {
    if (x < lo || x > hi) m += std::abs(w);
  });
  return m;
}

RadialProfileMeasure::RadialProfileMeasure(MeasureData data, double lambda, bool probability)
    : data_(std::move(data)), lambda_(lambda), probability_(probability) {
  if (!(lambda >= -0.5)) throw DomainError("radial profile: lambda must be >= -1/2");
  for (double r : data_.grid())
    if (r < 0.0) throw DomainError("radial profile: grid must be nonnegative");
  for (const Atom& a : data_.atoms())
    if (a.point < 0.0) throw DomainError("radial profile: atoms must sit on R_+");
  if (probability_) {
    for (double v : data_.density())
      if (v < 0.0) throw DomainError("radial profile: probability density must be nonnegative");
    for (const Atom& a : data_.atoms())
      if (a.weight < 0.0) throw DomainError("radial profile: probability atoms must be nonnegative");
    if (std::abs(data_.mass() - 1.0) > 1e-8)
      throw DomainError("radial profile: probability measure must have mass 1");
  }
}

RadialProfileMeasure RadialProfileMeasure::point_mass(double r, double lambda) {
  return RadialProfileMeasure(MeasureData({}, {}, {}, {{r, 1.0}}), lambda, true);
}

std::string RadialProfileMeasure::to_json() const {
  json j = data_to_json(data_);
  j["lambda"] = lambda_;
  j["probability"] = probability_;
  return j.dump();
}

RadialProfileMeasure RadialProfileMeasure::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("measure JSON: ") + e.what());
  }
  if (!j.contains("lambda")) throw DomainError("radial profile JSON: missing \"lambda\"");
  return RadialProfileMeasure(data_from_json(j), j.at("lambda").get<double>(),
                              j.value("probability", false));
}

SignedLineMeasure::SignedLineMeasure(MeasureData data, bool probability)
    : data_(std::move(data)), probability_(probability) {
  if (probability_) {
    for (double v : data_.density())
      if (v < -1e-12) throw DomainError("line measure: probability density must be nonnegative");
    if (std::abs(data_.mass() - 1.0) > 1e-8)
      throw DomainError("line measure: probability measure must have mass 1");
  }
}

SignedLineMeasure SignedLineMeasure::point_mass(double x) {
  return SignedLineMeasure(MeasureData({}, {}, {}, {{x, 1.0}}), true);
}

SignedLineMeasure SignedLineMeasure::reflected() const {
  const auto n = data_.grid().size();
  std::vector<double> g(n), d(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = -data_.grid()[n - 1 - i];
    d[i] = data_.density()[n - 1 - i];
    w[i] = data_.weights()[n - 1 - i];
  }
  std::vector<Atom> atoms;
  for (const Atom& a : data_.atoms()) atoms.push_back({-a.point, a.weight});
  return SignedLineMeasure(MeasureData(std::move(g), std::move(d), std::move(w), std::move(atoms)),
                           probability_);
}

std::string SignedLineMeasure::to_json(std::optional<double> k) const {
  json j = data_to_json(data_);
  if (k) j["k"] = *k;
  j["probability"] = probability_;
  return j.dump();
}

SignedLineMeasure SignedLineMeasure::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("measure JSON: ") + e.what());
  }
  return SignedLineMeasure(data_from_json(j), j.value("probability", false));
}

}  // namespace dunkl
