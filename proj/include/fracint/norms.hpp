#pragma once

#include <string>

#include "fracint/sampled_function.hpp"

namespace fracint {

struct weight_singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// max |f| over the nodes.
double sup_norm(const SampledFunction& f);

// Trapezoid approximation of (int |x^c f(x)|^p dx/x)^{1/p}.  On geometric
// grids the dx/x measure is uniform in ln x and the rule is applied there;
// closed grids integrate in x with first-cell handling of the x^{cp-1}
// weight.  Throws weight_singularity_error when c*p <= 0 and f(0) != 0.
double weighted_lp_norm(const SampledFunction& f, double c, double p);

// Discrete sup of |f(t)-f(s)|/|t-s|^alpha over node pairs (a lower bound for
// the continuum seminorm).  adjacent_only restricts to neighboring nodes,
// the O(N) fast path.
double holder_seminorm(const SampledFunction& f, double alpha,
                       bool adjacent_only = false, int threads = 1);

// Same sup restricted to pairs with 0 < |t-s| <= delta.
double little_holder_modulus(const SampledFunction& f, double alpha,
                             double delta);

// Norm selector used by operator-level code.
struct NormSpec {
  enum class Kind { sup, weighted_lp, holder_seminorm, little_holder_modulus };
  Kind kind = Kind::sup;
  double c = 0.5;
  double p = 2.0;
  double alpha = 0.5;
  double delta = 0.1;

  static NormSpec sup_spec() { return {}; }
  static NormSpec weighted(double c, double p);
  static NormSpec holder(double alpha);
  static NormSpec little_holder(double alpha, double delta);
  void validate() const;
  std::string name() const;
};

double evaluate_norm(const SampledFunction& f, const NormSpec& spec,
                     int threads = 1);

// Norm of the node-wise difference f - g (grids must match).
double norm_of_difference(const SampledFunction& f, const SampledFunction& g,
                          const NormSpec& spec, int threads = 1);

}  // namespace fracint
