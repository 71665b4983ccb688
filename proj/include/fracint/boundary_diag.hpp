#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fracint {

using cplx = std::complex<double>;

// The diagonal semigroup T(z)(x_n) = exp(lambda_n z) x_n on truncated l^2,
// lambda_n = -n + i n + i ln(n+1), holomorphic on the sector |arg z| < pi/4.
// The two sector boundaries behave differently: the upper one damps every
// component, the lower one amplifies by (n+1)^{t/sqrt(2)}.
struct DiagonalGenerator {
  std::size_t truncation = 2048;

  cplx eigenvalue(std::size_t n) const;
  void validate() const;
};

// Point of the closed sector of half-angle pi/4.
struct SectorPoint {
  double rho = 0.0;    // modulus >= 0
  double theta = 0.0;  // angle in [-pi/4, pi/4]

  cplx value() const;
  void validate() const;
  static SectorPoint from_complex(cplx z, double snap_tol = 1e-12);
};

struct DiagApplyResult {
  std::vector<cplx> values;
  std::vector<unsigned char> overflowed;  // per-component flag
  bool any_overflow = false;
};

// Componentwise multiplication by exp(lambda_n z).  Components whose
// exponent real part would overflow are flagged (evidence that x is not in
// the lower-boundary domain) instead of producing infinities.
DiagApplyResult diag_apply(const DiagonalGenerator& gen, const SectorPoint& z,
                           const std::vector<cplx>& x);

// l^2 norm of T(t e^{i pi/4}) x in closed form; finite for every x.
double upper_boundary_norm(double t, const std::vector<cplx>& x);

// Partial sums sum^N (n+1)^{sqrt(2) t} |x_n|^2 along the schedule; verdict
// from their increments (member / non_member / inconclusive).
enum class Membership { member, non_member, inconclusive };

std::string membership_name(Membership m);

struct MembershipReport {
  Membership verdict = Membership::inconclusive;
  std::vector<std::size_t> schedule;
  std::vector<double> partial_sums;  // in log-space safe arithmetic
  std::vector<double> increments;
  double t = 0.0;
};

MembershipReport lower_boundary_membership(const std::vector<cplx>& x, double t,
                                           const std::vector<std::size_t>& N_schedule);

}  // namespace fracint
