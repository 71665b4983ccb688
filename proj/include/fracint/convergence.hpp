#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracint/sampled_function.hpp"

namespace fracint {

enum class Verdict { converged, diverged, inconclusive };

std::string verdict_name(Verdict v);

// Outcome of a sigma -> 0+ limit scheme.  For converged runs
// norms_or_defects holds the successive-difference norms; for diverged runs
// it holds the value norms whose power-law growth was fitted.
struct ConvergenceReport {
  std::vector<double> sigma_values;
  std::vector<double> norms_or_defects;
  std::optional<double> extrapolated;  // scalar summary when meaningful
  Verdict verdict = Verdict::inconclusive;
  double slope = 0.0;     // log-log slope of values vs sigma
  double exponent = 0.0;  // integer-snapped power for diverged verdicts
  bool warning = false;   // e.g. p = 1 boundary attempt
  std::string note;
};

// Verdict thresholds: successive-difference ratios all < 0.75 => converged;
// log-log slope of value norms within +-0.15 of a negative integer =>
// diverged with that exponent; anything else is inconclusive.
ConvergenceReport classify_sigma_limit(const std::vector<double>& sigmas,
                                       const std::vector<double>& diff_norms,
                                       const std::vector<double>& value_norms);

// Linear-in-sigma extrapolation to 0 through the last two entries.
double richardson_scalar(const std::vector<double>& sigmas,
                         const std::vector<double>& values);
std::vector<cplx> richardson_vector(const std::vector<double>& sigmas,
                                    const std::vector<std::vector<cplx>>& values);

// Least-squares slope of ln(y) vs ln(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fracint
