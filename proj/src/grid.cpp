#include "fracint/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracint {

Grid Grid::closed_uniform(std::size_t n) {
  if (n < 3) throw std::invalid_argument("grid: need at least 3 nodes");
  Grid g;
  g.kind = GridKind::closed_unit;
  g.uniform = true;
  g.nodes.resize(n);
  double h = 1.0 / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) g.nodes[i] = double(i) * h;
  g.nodes.back() = 1.0;
  return g;
}

Grid Grid::closed_from_nodes(std::vector<double> nodes) {
  Grid g;
  g.kind = GridKind::closed_unit;
  g.nodes = std::move(nodes);
  g.uniform = false;
  g.validate();
  return g;
}

Grid Grid::open_geometric(std::size_t n, double a, double x_min) {
  if (n < 3) throw std::invalid_argument("grid: need at least 3 nodes");
  if (!(x_min > 0.0) || !(a > x_min))
    throw std::invalid_argument("grid: need 0 < x_min < a");
  Grid g;
  g.kind = GridKind::open_weighted;
  g.geometric = true;
  g.nodes.resize(n);
  double dl = std::log(a / x_min) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    g.nodes[i] = x_min * std::exp(double(i) * dl);
  g.nodes.back() = a;
  return g;
}

double Grid::step() const {
  if (kind != GridKind::closed_unit || !uniform)
    throw std::logic_error("grid: step() requires a uniform closed grid");
  return nodes[1] - nodes[0];
}

double Grid::log_step() const {
  if (kind != GridKind::open_weighted || !geometric)
    throw std::logic_error("grid: log_step() requires a geometric grid");
  return std::log(nodes[1] / nodes[0]);
}

void Grid::validate() const {
  if (nodes.size() < 3) throw std::invalid_argument("grid: need at least 3 nodes");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw std::invalid_argument("grid: nodes must be strictly increasing");
  if (kind == GridKind::closed_unit) {
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
      throw std::invalid_argument("grid: closed-unit grid must span [0,1]");
  } else {
    if (!(nodes.front() > 0.0))
      throw std::invalid_argument("grid: open-weighted grid must exclude 0");
  }
}

bool Grid::same_nodes(const Grid& other, double tol) const {
  if (nodes.size() != other.nodes.size()) return false;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (std::abs(nodes[i] - other.nodes[i]) > tol) return false;
  return true;
}

}  // namespace fracint
