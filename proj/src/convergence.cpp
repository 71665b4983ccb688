#include "fracint/convergence.hpp"

#include <cmath>
#include <stdexcept>

namespace fracint {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope: need matching lists, size >= 2");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    ++n;
  }
  if (n < 2) return 0.0;
  double den = double(n) * sxx - sx * sx;
  if (den == 0.0) return 0.0;
  return (double(n) * sxy - sx * sy) / den;
}

double richardson_scalar(const std::vector<double>& sigmas,
                         const std::vector<double>& values) {
  if (sigmas.size() != values.size() || sigmas.size() < 2)
    throw std::invalid_argument("richardson: need >= 2 schedule points");
  std::size_t k = sigmas.size() - 1;
  double s0 = sigmas[k - 1], s1 = sigmas[k];
  return (s0 * values[k] - s1 * values[k - 1]) / (s0 - s1);
}

std::vector<cplx> richardson_vector(
    const std::vector<double>& sigmas,
    const std::vector<std::vector<cplx>>& values) {
  if (sigmas.size() != values.size() || sigmas.size() < 2)
    throw std::invalid_argument("richardson: need >= 2 schedule points");
  std::size_t k = sigmas.size() - 1;
  double s0 = sigmas[k - 1], s1 = sigmas[k];
  double w1 = s0 / (s0 - s1), w0 = -s1 / (s0 - s1);
  std::vector<cplx> out(values[k].size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = w1 * values[k][i] + w0 * values[k - 1][i];
  return out;
}

ConvergenceReport classify_sigma_limit(const std::vector<double>& sigmas,
                                       const std::vector<double>& diff_norms,
                                       const std::vector<double>& value_norms) {
  if (sigmas.size() < 2)
    throw std::invalid_argument("classify_sigma_limit: schedule too short");
  for (std::size_t i = 0; i + 1 < sigmas.size(); ++i)
    if (!(sigmas[i] > sigmas[i + 1]) || !(sigmas[i + 1] > 0.0))
      throw std::invalid_argument(
          "classify_sigma_limit: schedule must decrease strictly to 0+");

  ConvergenceReport rep;
  rep.sigma_values = sigmas;

  double scale = 0.0;
  for (double v : value_norms) scale = std::max(scale, v);
  const double tiny = 1e-14 * std::max(scale, 1.0);

  bool all_tiny = !diff_norms.empty();
  for (double d : diff_norms) all_tiny = all_tiny && d <= tiny;
  if (all_tiny) {
    rep.verdict = Verdict::converged;
    rep.norms_or_defects = diff_norms;
    rep.note = "differences at roundoff level";
    return rep;
  }

  bool geometric = diff_norms.size() >= 2;
  for (std::size_t i = 0; i + 1 < diff_norms.size(); ++i) {
    if (diff_norms[i] <= tiny) continue;
    if (!(diff_norms[i + 1] / diff_norms[i] < 0.75)) geometric = false;
  }
  if (geometric) {
    rep.verdict = Verdict::converged;
    rep.norms_or_defects = diff_norms;
    return rep;
  }

  rep.slope = loglog_slope(sigmas, value_norms);
  double nearest = std::round(rep.slope);
  if (nearest <= -1.0 && std::abs(rep.slope - nearest) <= 0.15) {
    rep.verdict = Verdict::diverged;
    rep.exponent = nearest;
    rep.norms_or_defects = value_norms;
    return rep;
  }

  rep.verdict = Verdict::inconclusive;
  rep.norms_or_defects = diff_norms.empty() ? value_norms : diff_norms;
  rep.note = "neither geometric decay nor clean power law";
  return rep;
}

}  // namespace fracint
