#include "fracint/boundary_diag.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracint {

namespace {
constexpr double kPi4 = 0.785398163397448309615660845819875721;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
// exp() overflows past ~709; keep a margin for the |x_n| factor
constexpr double kOverflowExponent = 690.0;
}  // namespace

cplx DiagonalGenerator::eigenvalue(std::size_t n) const {
  double dn = double(n);
  return cplx(-dn, dn + std::log(dn + 1.0));
}

void DiagonalGenerator::validate() const {
  if (truncation < 1)
    throw std::invalid_argument("diagonal generator: truncation >= 1 required");
}

cplx SectorPoint::value() const {
  return cplx(rho * std::cos(theta), rho * std::sin(theta));
}

void SectorPoint::validate() const {
  if (!(rho >= 0.0))
    throw std::invalid_argument("sector point: modulus >= 0 required");
  if (!(theta >= -kPi4 && theta <= kPi4))
    throw std::invalid_argument("sector point: |angle| <= pi/4 required");
}

SectorPoint SectorPoint::from_complex(cplx z, double snap_tol) {
  SectorPoint p;
  p.rho = std::abs(z);
  p.theta = (p.rho == 0.0) ? 0.0 : std::arg(z);
  if (std::abs(p.theta - kPi4) <= snap_tol) p.theta = kPi4;
  if (std::abs(p.theta + kPi4) <= snap_tol) p.theta = -kPi4;
  p.validate();
  return p;
}

DiagApplyResult diag_apply(const DiagonalGenerator& gen, const SectorPoint& z,
                           const std::vector<cplx>& x) {
  gen.validate();
  z.validate();
  if (x.size() > gen.truncation)
    throw std::invalid_argument("diag_apply: sequence longer than truncation");
  DiagApplyResult res;
  res.values.resize(x.size());
  res.overflowed.assign(x.size(), 0);
  const cplx zv = z.value();
  for (std::size_t n = 0; n < x.size(); ++n) {
    cplx w = gen.eigenvalue(n) * zv;
    if (w.real() > kOverflowExponent) {
      res.values[n] = cplx(0.0, 0.0);
      res.overflowed[n] = 1;
      res.any_overflow = true;
      continue;
    }
    res.values[n] = std::exp(w) * x[n];
  }
  return res;
}

double upper_boundary_norm(double t, const std::vector<cplx>& x) {
  if (!(t >= 0.0))
    throw std::invalid_argument("upper_boundary_norm: t >= 0 required");
  // |exp(lambda_n t e^{i pi/4})| = exp(-sqrt(2) n t - t ln(n+1)/sqrt(2))
  double acc = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    double ex = -kSqrt2 * double(n) * t - t * std::log(double(n) + 1.0) / kSqrt2;
    double a = std::abs(x[n]);
    if (a == 0.0) continue;
    double term = 2.0 * ex + 2.0 * std::log(a);
    if (term < -1400.0) continue;  // underflow-safe skip
    acc += std::exp(term);
  }
  return std::sqrt(acc);
}

std::string membership_name(Membership m) {
  switch (m) {
    case Membership::member: return "member";
    case Membership::non_member: return "non_member";
    case Membership::inconclusive: return "inconclusive";
  }
  return "?";
}

MembershipReport lower_boundary_membership(
    const std::vector<cplx>& x, double t,
    const std::vector<std::size_t>& N_schedule) {
  if (!(t >= 0.0))
    throw std::invalid_argument("lower_boundary_membership: t >= 0 required");
  if (N_schedule.size() < 3)
    throw std::invalid_argument("lower_boundary_membership: schedule too short");
  for (std::size_t i = 0; i + 1 < N_schedule.size(); ++i)
    if (!(N_schedule[i] < N_schedule[i + 1]))
      throw std::invalid_argument("lower_boundary_membership: schedule must increase");

  MembershipReport rep;
  rep.t = t;
  rep.schedule = N_schedule;
  const double w = kSqrt2 * t;  // (n+1)^{sqrt(2) t} |x_n|^2 summed

  double acc = 0.0;
  std::size_t n = 0;
  for (std::size_t N : N_schedule) {
    for (; n < N && n < x.size(); ++n) {
      double a = std::abs(x[n]);
      if (a == 0.0) continue;
      double lg = w * std::log(double(n) + 1.0) + 2.0 * std::log(a);
      if (lg > kOverflowExponent) {
        // a single term already past the overflow threshold settles it
        rep.partial_sums.push_back(std::numeric_limits<double>::max());
        rep.verdict = Membership::non_member;
        return rep;
      }
      if (lg > -1400.0) acc += std::exp(lg);
    }
    rep.partial_sums.push_back(acc);
  }
  for (std::size_t i = 0; i + 1 < rep.partial_sums.size(); ++i)
    rep.increments.push_back(rep.partial_sums[i + 1] - rep.partial_sums[i]);

  // geometric decay of increments over the last three schedule points
  // => member; increments still growing by > 1.5x => non-member
  const double scale = rep.partial_sums.back();
  const double tiny = 1e-14 * std::max(scale, 1e-300);
  std::size_t m = rep.increments.size();
  if (m >= 2) {
    double i0 = rep.increments[m - 2], i1 = rep.increments[m - 1];
    if (i1 <= tiny && i0 <= tiny) {
      rep.verdict = Membership::member;  // saturated (finite support)
    } else if (i0 > 0.0 && i1 / i0 < 0.9 &&
               (m < 3 || rep.increments[m - 3] <= tiny ||
                i0 / rep.increments[m - 3] < 0.9)) {
      rep.verdict = Membership::member;
    } else if (i0 > 0.0 && i1 / i0 > 1.5) {
      rep.verdict = Membership::non_member;
    } else {
      rep.verdict = Membership::inconclusive;
    }
  }
  return rep;
}

}  // namespace fracint
