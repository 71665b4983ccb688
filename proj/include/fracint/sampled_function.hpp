#pragma once

#include <complex>
#include <vector>

#include "fracint/grid.hpp"

namespace fracint {

using cplx = std::complex<double>;

// A function known through its values on a grid.  Between nodes the model is
// piecewise linear (linear in ln x on geometric grids).
struct SampledFunction {
  Grid grid;
  std::vector<cplx> values;

  SampledFunction() = default;
  SampledFunction(Grid g, std::vector<cplx> v);

  std::size_t size() const { return values.size(); }
  void validate() const;
};

// Piecewise-linear interpolation onto a target grid contained in the source
// domain.  Geometric source grids interpolate linearly in ln x.  Throws on
// extrapolation requests.
SampledFunction resample(const SampledFunction& f, const Grid& target);

// Pointwise evaluation of the piecewise-linear model (same rules as resample).
cplx eval_piecewise_linear(const SampledFunction& f, double x);

}  // namespace fracint
