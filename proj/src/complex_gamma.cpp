#include "fracint/complex_gamma.hpp"

#include <cmath>

namespace fracint {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrt2Pi = 2.506628274631000502415765284811045253;

// Lanczos coefficients, g = 607/128 (Godfrey).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// Valid for Re z >= 0.5.
cplx lanczos_half_plane(cplx z) {
  cplx s = kLanczos[0];
  for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z - 1.0 + double(k));
  cplx t = z + (kLanczosG - 0.5);
  return kSqrt2Pi * std::pow(t, z - 0.5) * std::exp(-t) * s;
}

}  // namespace

bool near_gamma_pole(cplx z, double tol) {
  double n = std::round(z.real());
  if (n > 0.5) return false;
  return std::abs(z - cplx(n, 0.0)) <= tol;
}

cplx cpow_pos(double x, cplx p) {
  return std::exp(p * std::log(x));
}

cplx cexpm1(cplx w) {
  // e^{x+iy} - 1 = (expm1(x) cos y - 2 sin^2(y/2)) + i e^x sin y
  double x = w.real(), y = w.imag();
  double sh = std::sin(0.5 * y);
  return cplx(std::expm1(x) * std::cos(y) - 2.0 * sh * sh,
              std::exp(x) * std::sin(y));
}

cplx gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("gamma: non-finite argument");
  if (near_gamma_pole(z))
    throw gamma_pole_error("gamma: argument at a non-positive integer pole");
  if (z.imag() < 0.0) return std::conj(gamma(std::conj(z)));
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  return lanczos_half_plane(z);
}

cplx reciprocal_gamma(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("reciprocal_gamma: non-finite argument");
  if (near_gamma_pole(z)) return cplx(0.0, 0.0);
  if (z.imag() < 0.0) return std::conj(reciprocal_gamma(std::conj(z)));
  if (z.real() < 0.5) {
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, and 1-z is in the Lanczos zone.
    return std::sin(kPi * z) * lanczos_half_plane(1.0 - z) / kPi;
  }
  return 1.0 / lanczos_half_plane(z);
}

}  // namespace fracint
