#pragma once

#include <complex>
#include <stdexcept>

namespace fracint {

using cplx = std::complex<double>;

// Distance threshold for treating z as a pole of Gamma (non-positive integer).
inline constexpr double kGammaPoleTol = 1e-14;

struct gamma_pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Gamma(z) for complex z.  Lanczos approximation on Re z >= 0.5, reflection
// formula below.  Relative accuracy ~1e-13 for |z| <= 50, |Im z| <= 50.
// Throws gamma_pole_error within kGammaPoleTol of {0, -1, -2, ...}.
cplx gamma(cplx z);

// 1/Gamma(z): entire; returns exactly 0 at non-positive integers.
cplx reciprocal_gamma(cplx z);

// exp(p * ln x) for x > 0 (principal branch, no ambiguity).
cplx cpow_pos(double x, cplx p);

// exp(w) - 1 without cancellation for small |w|.
cplx cexpm1(cplx w);

// True if z is within tol of a non-positive integer.
bool near_gamma_pole(cplx z, double tol = kGammaPoleTol);

}  // namespace fracint
