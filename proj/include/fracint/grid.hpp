#pragma once

#include <cstddef>
#include <vector>

namespace fracint {

enum class GridKind { closed_unit, open_weighted };

// Node set for sampled functions.  Closed-unit grids live on [0,1] and
// include both endpoints; open-weighted grids live on (0,a] and exclude 0
// (smallest node x_min > 0).  Geometric grids are uniform in ln x.
struct Grid {
  GridKind kind = GridKind::closed_unit;
  std::vector<double> nodes;
  bool uniform = false;    // closed-unit: equal spacing
  bool geometric = false;  // open-weighted: equal spacing in ln x

  static Grid closed_uniform(std::size_t n);
  static Grid closed_from_nodes(std::vector<double> nodes);
  static Grid open_geometric(std::size_t n, double a, double x_min);

  std::size_t size() const { return nodes.size(); }
  double front() const { return nodes.front(); }
  double back() const { return nodes.back(); }

  // Spacing accessors; only meaningful for the corresponding flavor.
  double step() const;      // uniform closed grid spacing
  double log_step() const;  // geometric grid spacing in ln x

  void validate() const;
  bool same_nodes(const Grid& other, double tol = 0.0) const;
};

}  // namespace fracint
