#include "dunkl/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {
namespace {

constexpr char kMagic[4] = {'D', 'K', 'G', 'F'};

static_assert(std::endian::native == std::endian::little,
              "binary grid layout assumes a little-endian host");

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw DomainError("binary grid: truncated input");
  return v;
}

std::vector<double> trapezoid(const std::vector<double>& x) {
  std::vector<double> w(x.size(), 0.0);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = 0.5 * (x[i + 1] - x[i]);
    w[i] += h;
    w[i + 1] += h;
  }
  return w;
}

}  // namespace

GridAxis dunkl_axis(double k, double R, int half_nodes) {
  if (!(k >= 0.0) || !(R > 0.0) || half_nodes < 1) throw DomainError("dunkl_axis: invalid arguments");
  const QuadratureRule& rule = gauss_jacobi(half_nodes, 0.0, 2.0 * k);
  const double half = 0.5 * R;
  GridAxis axis;
  const std::size_t n = rule.size();
  axis.nodes.resize(2 * n);
  axis.weights.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = half * (1.0 + rule.nodes[i]);
    const double w = rule.weights[i] * std::pow(half, 2.0 * k + 1.0) / std::pow(s, 2.0 * k);
    axis.nodes[n - 1 - i] = -s;
    axis.weights[n - 1 - i] = w;
    axis.nodes[n + i] = s;
    axis.weights[n + i] = w;
  }
  return axis;
}

GridAxis uniform_axis(double R, int n) {
  if (!(R > 0.0) || n < 2) throw DomainError("uniform_axis: invalid arguments");
  GridAxis axis;
  for (int i = 0; i < n; ++i) axis.nodes.push_back(-R + 2.0 * R * i / (n - 1));
  axis.weights = trapezoid(axis.nodes);
  return axis;
}

GridFunction::GridFunction(std::vector<GridAxis> axes, std::vector<cplx> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
  if (axes_.empty()) throw DomainError("grid function: needs at least one axis");
  std::size_t total = 1;
  for (const GridAxis& a : axes_) {
    if (a.nodes.empty() || a.nodes.size() != a.weights.size())
      throw DomainError("grid function: axis nodes and weights must be nonempty and equal length");
    for (std::size_t i = 1; i < a.nodes.size(); ++i)
      if (!(a.nodes[i] > a.nodes[i - 1])) throw DomainError("grid function: axis not increasing");
    total *= a.size();
  }
  if (total != values_.size()) throw DomainError("grid function: value count does not match grid");
}

GridFunction GridFunction::sample(std::vector<GridAxis> axes,
                                  const std::function<cplx(const std::vector<double>&)>& f) {
  std::size_t total = 1;
  for (const GridAxis& a : axes) total *= a.size();
  GridFunction g(std::move(axes), std::vector<cplx>(total));
  for (std::size_t i = 0; i < total; ++i) g.values_[i] = f(g.point(i));
  return g;
}

std::vector<std::size_t> GridFunction::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t d = axes_.size(); d-- > 0;) {
    idx[d] = flat % axes_[d].size();
    flat /= axes_[d].size();
  }
  return idx;
}

std::vector<double> GridFunction::point(std::size_t flat) const {
  const auto idx = multi_index(flat);
  std::vector<double> p(axes_.size());
  for (std::size_t d = 0; d < axes_.size(); ++d) p[d] = axes_[d].nodes[idx[d]];
  return p;
}

double GridFunction::cell_weight(std::size_t flat) const {
  const auto idx = multi_index(flat);
  double w = 1.0;
  for (std::size_t d = 0; d < axes_.size(); ++d) w *= axes_[d].weights[idx[d]];
  return w;
}

double GridFunction::boundary_max() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto idx = multi_index(i);
    bool edge = false;
    for (std::size_t d = 0; d < axes_.size(); ++d)
      edge = edge || idx[d] == 0 || idx[d] + 1 == axes_[d].size();
    if (edge) m = std::max(m, std::abs(values_[i]));
  }
  return m;
}

GridFunction GridFunction::reflected() const {
  for (const GridAxis& a : axes_) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(a.nodes[i] + a.nodes[n - 1 - i]) > 1e-12 * std::max(1.0, std::abs(a.nodes[i])))
        throw DomainError("grid function: reflection needs axes symmetric about zero");
  }
  std::vector<cplx> out(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    auto idx = multi_index(i);
    std::size_t flat = 0;
    for (std::size_t d = 0; d < axes_.size(); ++d)
      flat = flat * axes_[d].size() + (axes_[d].size() - 1 - idx[d]);
    out[flat] = values_[i];
  }
  return GridFunction(axes_, std::move(out));
}

void GridFunction::write_csv(std::ostream& out) const {
  for (std::size_t d = 0; d < axes_.size(); ++d) out << 'x' << d + 1 << ',';
  out << "re,im\n";
  out.precision(17);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (double c : point(i)) out << c << ',';
    out << values_[i].real() << ',' << values_[i].imag() << '\n';
  }
}

GridFunction GridFunction::read_csv(std::istream& in) {
  std::string line;
  do {
    if (!std::getline(in, line)) throw DomainError("grid CSV: empty input");
  } while (line.empty() || line.front() == '#');
  const auto columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  if (columns < 3) throw DomainError("grid CSV: expected coordinate columns plus re,im");
  const std::size_t dim = columns - 2;
  std::vector<std::vector<double>> coords(dim);
  std::vector<std::pair<std::vector<double>, cplx>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) {
      try {
        vals.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DomainError("grid CSV: non-numeric cell '" + cell + "'");
      }
    }
    if (vals.size() != columns) throw DomainError("grid CSV: ragged row");
    std::vector<double> p(vals.begin(), vals.begin() + static_cast<long>(dim));
    for (std::size_t d = 0; d < dim; ++d) coords[d].push_back(p[d]);
    rows.emplace_back(std::move(p), cplx(vals[dim], vals[dim + 1]));
  }
  std::vector<GridAxis> axes(dim);
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    auto& c = coords[d];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    axes[d].nodes = c;
    axes[d].weights = c.size() > 1 ? trapezoid(c) : std::vector<double>{1.0};
    total *= c.size();
  }
  if (total != rows.size()) throw DomainError("grid CSV: rows do not form a full tensor grid");
  std::vector<cplx> values(total);
  std::vector<bool> seen(total, false);
  for (const auto& [p, v] : rows) {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      const auto& nodes = axes[d].nodes;
      const auto pos = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), p[d]) -
                                                nodes.begin());
      flat = flat * nodes.size() + pos;
    }
    if (seen[flat]) throw DomainError("grid CSV: duplicate grid point");
    seen[flat] = true;
    values[flat] = v;
  }
  return GridFunction(std::move(axes), std::move(values));
}

void GridFunction::write_binary(std::ostream& out) const {
  out.write(kMagic, 4);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(axes_.size()));
  for (const GridAxis& a : axes_) put<std::uint64_t>(out, a.size());
  for (const GridAxis& a : axes_) {
    for (double v : a.nodes) put(out, v);
    for (double v : a.weights) put(out, v);
  }
  for (const cplx& v : values_) {
    put(out, v.real());
    put(out, v.imag());
  }
}

GridFunction GridFunction::read_binary(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) throw DomainError("binary grid: bad header");
  const auto dim = get<std::uint32_t>(in);
  if (dim == 0 || dim > 16) throw DomainError("binary grid: unsupported dimension");
  std::vector<std::uint64_t> sizes(dim);
  for (auto& s : sizes) s = get<std::uint64_t>(in);
  std::vector<GridAxis> axes(dim);
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim; ++d) {
    if (sizes[d] == 0 || sizes[d] > (1u << 24)) throw DomainError("binary grid: bad axis size");
    axes[d].nodes.resize(sizes[d]);
    axes[d].weights.resize(sizes[d]);
    for (auto& v : axes[d].nodes) v = get<double>(in);
    for (auto& v : axes[d].weights) v = get<double>(in);
    total *= sizes[d];
  }
  std::vector<cplx> values(total);
  for (auto& v : values) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    v = cplx(re, im);
  }
  return GridFunction(std::move(axes), std::move(values));
}

}  // namespace dunkl
