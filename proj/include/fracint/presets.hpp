#pragma once

#include <string>

#include "fracint/sampled_function.hpp"

namespace fracint {

// Named test functions used by the CLI and the suites:
//   one              f = 1
//   linear           f = x
//   monomial(beta)   f = x^beta
//   hat(center,width) triangular bump, zero outside |x-center| > width
//   sin              f = sin(pi x)
//   holder(alpha)    f = x^alpha
struct PresetSpec {
  std::string name = "one";
  double beta = 1.0;
  double center = 0.5;
  double width = 0.25;
  double alpha = 0.5;
};

SampledFunction make_preset(const PresetSpec& spec, const Grid& grid);
SampledFunction make_preset(const std::string& name, const Grid& grid);

}  // namespace fracint
