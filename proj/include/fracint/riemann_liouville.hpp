#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fracint/complex_gamma.hpp"
#include "fracint/convergence.hpp"
#include "fracint/norms.hpp"
#include "fracint/sampled_function.hpp"

namespace fracint {

struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct verdict_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex integration order.  boundary marks a purely imaginary order
// (Re z = 0, Im z != 0), reached only through sigma -> 0+ schedules.
struct FractionalOrder {
  cplx z{1.0, 0.0};
  bool boundary = false;

  static FractionalOrder interior(cplx z);
  static FractionalOrder imaginary(double s);
  void validate() const;
};

// Lower-triangular product-integration weights for the kernel (t-s)^{z-1}
// on a uniform closed grid: row k integrates exactly against any function
// that is linear on each cell of [0, t_k].  Rows share a Toeplitz core.
struct ProductQuadrature {
  Grid grid;
  cplx z;
  cplx h_pow_z;
  std::vector<cplx> core;   // c_m: weight of f_{k-m}, 1 <= k-m <= k (c_0 diagonal)
  std::vector<cplx> edge0;  // A0(k): weight of f_0 in row k (k >= 1)

  std::size_t size() const { return grid.size(); }
  // y_k = int_0^{t_k} (t_k - s)^{z-1} f_pl(s) ds  (no 1/Gamma factor)
  void apply(const std::vector<cplx>& f, std::vector<cplx>& out) const;
  void apply_adjoint(const std::vector<cplx>& f, std::vector<cplx>& out) const;
  cplx weight(std::size_t row, std::size_t col) const;
};

ProductQuadrature rl_quadrature(cplx z, const Grid& grid);
ProductQuadrature rl_quadrature(const FractionalOrder& z, const Grid& grid);

// (J(z)f)(t_k) = (1/Gamma(z)) * product-integration of f; exact for
// piecewise-linear f up to roundoff and Gamma tolerance.
SampledFunction rl_apply(cplx z, const SampledFunction& f);
SampledFunction rl_apply(const FractionalOrder& z, const SampledFunction& f);

// Dense finite section of J(z), row-major.
struct OperatorMatrix {
  Grid grid;
  std::size_t n = 0;
  std::vector<cplx> entries;
  NormSpec norm_context;

  cplx at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  std::vector<cplx> apply(const std::vector<cplx>& x) const;
};

OperatorMatrix rl_matrix(cplx z, const Grid& grid, const NormSpec& ctx);

// Nilpotent right shift (S(tau) f)(t) = f(t - tau), 0 for t < tau.
SampledFunction rl_shift_apply(double tau, const SampledFunction& f);

// || J(z1)J(z2)f - J(z1+z2)f ||_n with both sides evaluated through the
// exact piecewise-power calculus on the piecewise-linear model of f.
double rl_semigroup_defect(cplx z1, cplx z2, const SampledFunction& f,
                           const NormSpec& n);

// Same defect with the composition done through finite-section matrices
// (resampling the intermediate result); carries the boundary-layer
// discretization error and is only useful at coarse tolerances.
double rl_semigroup_defect_discrete(cplx z1, cplx z2, const SampledFunction& f,
                                    const NormSpec& n);

// J(sigma_k + i s) f along the schedule; geometric decay of successive
// differences => converged with the Richardson-extrapolated limit,
// otherwise a power-law fit / inconclusive verdict.
std::pair<SampledFunction, ConvergenceReport> rl_boundary_apply(
    double s, const SampledFunction& f, const std::vector<double>& sigma_schedule,
    const NormSpec& n);

const std::vector<double>& default_sigma_schedule();

// || J(i s1)J(i s2)f - J(i(s1+s2))f ||_alpha via matched sigma schedules.
// Throws verdict_error if any factor fails to converge in the Holder norm.
double rl_boundary_group_defect(double s1, double s2, const SampledFunction& f,
                                double alpha);

// Exact sup-norm of the modulus kernel: 1/(|Gamma(z)| Re z).
double rl_opnorm_sup(cplx z);

// Largest singular value of the L2-scaled finite section at size N; boundary
// orders run the sigma schedule and extrapolate.
double rl_opnorm_l2(const FractionalOrder& z, std::size_t N,
                    const std::optional<std::vector<double>>& sigma_schedule = {});

// Family-sup lower bound for ||J(z)|| on the Holder-alpha scale.
double rl_opnorm_holder_estimate(cplx z, double alpha,
                                 const std::vector<SampledFunction>& family);

std::vector<SampledFunction> default_holder_family(const Grid& grid, double alpha);

// ||J(alpha)f||_alpha / ||f||_inf  (bounded by 2/Gamma(alpha+1) + grid slack).
double rl_regularity_embedding_check(double alpha, const SampledFunction& f);

}  // namespace fracint
