#include "fracint/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracint {

SampledFunction::SampledFunction(Grid g, std::vector<cplx> v)
    : grid(std::move(g)), values(std::move(v)) {
  validate();
}

void SampledFunction::validate() const {
  grid.validate();
  if (values.size() != grid.nodes.size())
    throw std::invalid_argument("sampled function: value/node count mismatch");
  for (const cplx& v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("sampled function: non-finite value");
}

cplx eval_piecewise_linear(const SampledFunction& f, double x) {
  const auto& nodes = f.grid.nodes;
  const double lo = nodes.front(), hi = nodes.back();
  const double pad = 1e-12 * (hi - lo);
  if (x < lo - pad || x > hi + pad)
    throw std::domain_error("resample: extrapolation request");
  x = std::clamp(x, lo, hi);
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  std::size_t j = (it == nodes.begin()) ? 0 : std::size_t(it - nodes.begin()) - 1;
  if (j + 1 >= nodes.size()) j = nodes.size() - 2;
  double x0 = nodes[j], x1 = nodes[j + 1];
  double w;
  if (f.grid.kind == GridKind::open_weighted && f.grid.geometric)
    w = std::log(x / x0) / std::log(x1 / x0);
  else
    w = (x - x0) / (x1 - x0);
  return (1.0 - w) * f.values[j] + w * f.values[j + 1];
}

SampledFunction resample(const SampledFunction& f, const Grid& target) {
  f.validate();
  target.validate();
  std::vector<cplx> out(target.size());
  for (std::size_t i = 0; i < target.size(); ++i)
    out[i] = eval_piecewise_linear(f, target.nodes[i]);
  return SampledFunction(target, std::move(out));
}

}  // namespace fracint
