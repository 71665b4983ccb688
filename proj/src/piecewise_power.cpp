#include "fracint/piecewise_power.hpp"

#include <cmath>
#include <stdexcept>

#include "fracint/complex_gamma.hpp"

namespace fracint {

PiecewisePower PiecewisePower::from_sampled(const SampledFunction& f) {
  f.validate();
  if (f.grid.kind != GridKind::closed_unit)
    throw std::invalid_argument("piecewise power: closed-unit grid required");
  const auto& t = f.grid.nodes;
  PiecewisePower p;
  p.terms.push_back({0.0, cplx(0.0, 0.0), f.values[0]});
  cplx prev_slope(0.0, 0.0);
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    cplx slope = (f.values[j + 1] - f.values[j]) / (t[j + 1] - t[j]);
    cplx jump = slope - prev_slope;
    if (jump != cplx(0.0, 0.0))
      p.terms.push_back({t[j], cplx(1.0, 0.0), jump});
    prev_slope = slope;
  }
  return p;
}

PiecewisePower PiecewisePower::fractional_integral(cplx z) const {
  if (z.real() < 0.0)
    throw std::invalid_argument("piecewise power: Re z >= 0 required");
  PiecewisePower out;
  out.terms.reserve(terms.size());
  for (const auto& tm : terms) {
    cplx ratio = gamma(tm.exponent + 1.0) * reciprocal_gamma(tm.exponent + 1.0 + z);
    out.terms.push_back({tm.offset, tm.exponent + z, tm.coef * ratio});
  }
  return out;
}

cplx PiecewisePower::eval(double t) const {
  cplx acc(0.0, 0.0);
  for (const auto& tm : terms) {
    double d = t - tm.offset;
    if (d > 0.0)
      acc += tm.coef * cpow_pos(d, tm.exponent);
    else if (d == 0.0 && tm.exponent == cplx(0.0, 0.0))
      acc += tm.coef;
  }
  return acc;
}

std::vector<cplx> PiecewisePower::eval_nodes(const Grid& grid) const {
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = eval(grid.nodes[i]);
  return out;
}

SampledFunction PiecewisePower::to_sampled(const Grid& grid) const {
  return SampledFunction(grid, eval_nodes(grid));
}

}  // namespace fracint
