#include "fracint/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace fracint {

SampledFunction make_preset(const PresetSpec& spec, const Grid& grid) {
  grid.validate();
  std::vector<cplx> v(grid.size());
  auto fill = [&](auto fn) {
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = fn(grid.nodes[i]);
  };
  if (spec.name == "one") {
    fill([](double) { return 1.0; });
  } else if (spec.name == "linear") {
    fill([](double x) { return x; });
  } else if (spec.name == "monomial") {
    double b = spec.beta;
    fill([b](double x) { return (x == 0.0) ? (b == 0.0 ? 1.0 : 0.0) : std::pow(x, b); });
  } else if (spec.name == "hat") {
    double c = spec.center, w = spec.width;
    if (!(w > 0.0)) throw std::invalid_argument("preset hat: width > 0 required");
    fill([c, w](double x) { return std::max(0.0, 1.0 - std::abs(x - c) / w); });
  } else if (spec.name == "sin") {
    fill([](double x) { return std::sin(3.14159265358979323846 * x); });
  } else if (spec.name == "holder") {
    double a = spec.alpha;
    fill([a](double x) { return (x == 0.0) ? 0.0 : std::pow(x, a); });
  } else {
    throw std::invalid_argument("unknown function preset: " + spec.name);
  }
  return SampledFunction(grid, std::move(v));
}

SampledFunction make_preset(const std::string& name, const Grid& grid) {
  PresetSpec s;
  s.name = name;
  return make_preset(s, grid);
}

}  // namespace fracint
