#pragma once

#include <utility>
#include <vector>

#include "fracint/convergence.hpp"
#include "fracint/norms.hpp"
#include "fracint/sampled_function.hpp"

namespace fracint {

// Parameters of the weighted fractional integration operators on X_c^p.
// Variant J integrates from 0 (lower limit), variant I toward infinity.
struct HadamardParams {
  cplx mu{1.0, 0.0};
  double c = 0.5;
  double p = 2.0;
  enum class Variant { J, I } variant = Variant::J;

  void validate() const;
  double stability_rate() const;  // Re mu - c (J) or Re mu + c (I)
  NormSpec space_norm() const { return NormSpec::weighted(c, p); }
};

struct HadamardApplyResult {
  SampledFunction out;
  // Per-node truncation bound for the mass lost below/above the grid,
  // expressed through the X_c-sup proxy of f and the stability rate.
  std::vector<double> tail_bound;
  double log_step = 0.0;
  std::size_t cells = 0;
};

// (J_mu^a f)(x) = (1/Gamma(a)) int_0^inf u^{a-1} e^{-mu u} f(x e^{-u}) du
// (I-variant: f(x e^{+u})), evaluated on the log-lattice by product
// integration: the kernel factor u^{a-1} is integrated exactly against a
// cubic model of e^{-mu u} f, so the weights reduce to one convolution.
HadamardApplyResult hadamard_apply(cplx alpha, const HadamardParams& params,
                                   const SampledFunction& f);

// Same operator through the fractional-power Bochner integral over the
// dilation orbit, quadratured with graded Gauss-Legendre panels against the
// full kernel u^{a-1} e^{-mu u}.  Independent of the moment route above.
HadamardApplyResult hadamard_from_power_formula(cplx alpha,
                                                const HadamardParams& params,
                                                const SampledFunction& f);

enum class DilationDirection { contract, expand };

// (T(t) f)(x) = e^{-mu t} f(x e^{-t})  (contract; expand uses x e^{+t}).
// Lattice multiples of the log step are exact index shifts.  On closed-unit
// grids only mu = 0 contraction is meaningful (used by the Favard check).
SampledFunction dilation_semigroup_apply(double t, cplx mu,
                                         DilationDirection dir,
                                         const SampledFunction& f,
                                         double* tail_bound = nullptr);

// || H(a1)H(a2)f - H(a1+a2)f || in the X_c^p norm (lattice composition).
double hadamard_semigroup_defect(cplx a1, cplx a2, const HadamardParams& params,
                                 const SampledFunction& f);

// Boundary group via the sigma schedule, in the X_c^p norm.  The report
// carries a warning at p = 1, where the boundary group is not guaranteed.
std::pair<SampledFunction, ConvergenceReport> hadamard_boundary_apply(
    double s, const HadamardParams& params, const SampledFunction& f,
    const std::vector<double>& sigma_schedule);

// Integer powers of the averaging operator, C^n = J_1^n.
SampledFunction cesaro_power(int n, const SampledFunction& f);

// Boyd's form (C^n f)(x) = (1/(n-1)!) int_0^1 (ln 1/s)^{n-1} f(sx) ds,
// computed in s with exact exponential-weighted antiderivatives; an
// algebraically independent route that must match cesaro_power.
SampledFunction cesaro_boyd_form(int n, const SampledFunction& f);

// max over t_list of t^{-alpha} ||T(t)f - f||_inf / ||f||_alpha  (mu = 0,
// contract).  At most 1 + grid slack when f has finite Holder seminorm.
double favard_inclusion_check(double alpha, const SampledFunction& f,
                              const std::vector<double>& t_list);

}  // namespace fracint
