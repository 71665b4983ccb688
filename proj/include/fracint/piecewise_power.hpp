#pragma once

#include <vector>

#include "fracint/sampled_function.hpp"

namespace fracint {

// Finite sums  sum_i  c_i * (t - a_i)_+^{p_i}  with complex exponents,
// Re p >= 0.  This is the closed image of the piecewise-linear function
// model under fractional integration: integrating shifts every exponent and
// rescales coefficients by Gamma ratios, so repeated applications stay in
// the class and evaluate exactly (up to Gamma accuracy) at any order with
// Re z >= 0, including the imaginary axis.
struct PiecewisePowerTerm {
  double offset = 0.0;
  cplx exponent{0.0, 0.0};
  cplx coef{0.0, 0.0};
};

struct PiecewisePower {
  std::vector<PiecewisePowerTerm> terms;

  // Exact representation of the piecewise-linear model of f (closed grid):
  // f(t) = f(0) + sum_j gamma_j (t - t_j)_+.
  static PiecewisePower from_sampled(const SampledFunction& f);

  // Image under the order-z fractional integral:
  // (t-a)_+^p  ->  Gamma(p+1)/Gamma(p+1+z) (t-a)_+^{p+z}.
  PiecewisePower fractional_integral(cplx z) const;

  // Term value at exact offsets is taken as 0 unless the exponent is 0.
  cplx eval(double t) const;
  std::vector<cplx> eval_nodes(const Grid& grid) const;
  SampledFunction to_sampled(const Grid& grid) const;
};

}  // namespace fracint
