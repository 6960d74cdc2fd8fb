#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/special_fn.hpp"

namespace dunkl {

/// One axis of a tensor grid; `weights` integrate against plain dx.
struct GridAxis {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Gauss-Jacobi nodes for s^{2k} ds on [0, R], mirrored onto [-R, R].
GridAxis dunkl_axis(double k, double R, int half_nodes);

/// n equispaced nodes on [-R, R] with trapezoid weights.
GridAxis uniform_axis(double R, int n);

/// Complex values on a tensor grid; the last axis varies fastest.
class GridFunction {
 public:
  GridFunction(std::vector<GridAxis> axes, std::vector<cplx> values);

  static GridFunction sample(std::vector<GridAxis> axes,
                             const std::function<cplx(const std::vector<double>&)>& f);

  const std::vector<GridAxis>& axes() const noexcept { return axes_; }
  const std::vector<cplx>& values() const noexcept { return values_; }
  std::vector<cplx>& values() noexcept { return values_; }
  std::size_t dim() const noexcept { return axes_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::vector<std::size_t> multi_index(std::size_t flat) const;
  std::vector<double> point(std::size_t flat) const;
  /// Product of the axis weights at the node.
  double cell_weight(std::size_t flat) const;
  /// Largest |value| among nodes on the outermost layer of the box.
  double boundary_max() const;
  /// Reflection f(x) -> f(-x); requires axes symmetric about zero.
  GridFunction reflected() const;

  void write_csv(std::ostream& out) const;
  static GridFunction read_csv(std::istream& in);
  void write_binary(std::ostream& out) const;
  static GridFunction read_binary(std::istream& in);

 private:
  std::vector<GridAxis> axes_;
  std::vector<cplx> values_;
};

}  // namespace dunkl
