#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "fracint/riemann_liouville.hpp"  // numerical_error

namespace fracint {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Finite stand-in for the generator with split spectrum: every eigenvalue
// must satisfy |Re lambda| > delta (verified against the eigensolver).
struct FiniteOperator {
  Matrix A;

  static FiniteOperator from_diagonal(const std::vector<cplx>& eigs);
  std::size_t dim() const { return std::size_t(A.rows()); }
  void validate() const;
};

struct SpectrumInfo {
  Vector eigenvalues;
  Matrix eigenvectors;
  std::vector<int> side;  // -1: Re < -delta, +1: Re > +delta
  double min_left_arg = 0.0;   // min |arg lambda| over the left part
  double min_right_arg = 0.0;  // min |arg(-lambda)| over the right part
  double norm_bound = 0.0;     // ||A||_2 estimate
};

// Eigen-decomposes A and checks the split hypothesis for the given delta.
SpectrumInfo analyze_spectrum(const FiniteOperator& A, double delta);

// Sectorial contour: rays at angles +-beta (pi/2 < beta < pi) joined by an
// arc of radius r < delta, lower ray inward, arc counterclockwise through
// angle 0, upper ray outward.
struct ContourSpec {
  double r = 0.5;
  double beta = 1.9;
  double R = 1e6;       // ray truncation radius (auto-extended by default)
  int n_ray = 200;      // target ray node count (panels adapt around it)
  int n_arc = 64;
  bool auto_extend = true;

  void validate(double delta) const;
  // Also checks that the left spectrum lies left of the path: |arg| > beta.
  void validate_against(const SpectrumInfo& info, double delta,
                        bool mirrored) const;
  static ContourSpec defaults_for(const SpectrumInfo& info, double delta);
};

// Solve (lambda I - A) y = x; lambda must keep distance >= 1e-10 from the
// spectrum (checked against the eigensolver oracle).
Vector resolvent_apply(const FiniteOperator& A, cplx lambda, const Vector& x);

// T1(t) = (1/2*pi*i) int_G e^{t lambda} R(lambda, A) dlambda  ->  the
// holomorphic semigroup generated by the left spectral part.
Matrix contour_T1(const FiniteOperator& A, double t, const ContourSpec& spec,
                  double delta);
// T2(t): same contour with A replaced by -A (right part, reversed flow).
Matrix contour_T2(const FiniteOperator& A, double t, const ContourSpec& spec,
                  double delta);

// P = (1/2*pi*i) int_G R(lambda, A) A / lambda dlambda + I: the Riesz
// projection onto the left spectral subspace.  The effective truncation
// radius comes from the target tolerance and one Richardson step in R.
Matrix projection_P(const FiniteOperator& A, const ContourSpec& spec,
                    double delta, double tol = 1e-9);

struct SplitSpaces {
  Matrix basis1;  // orthonormal basis of E1 = range(P A^{-1})
  Matrix basis2;  // orthonormal basis of E2 = ker(P A^{-1})
  Vector spectrum1, spectrum2;
};

// Rank-revealing split of P A^{-1} (singular-value threshold 1e-8) and the
// spectra of the compressed blocks A|E1, A|E2.
SplitSpaces split_spaces(const FiniteOperator& A, const Matrix& P);

// Defect of R(z, A1) A1^{-1} x = int_0^inf e^{-zt} T1(t) A1^{-1} x dt on E1,
// with the Laplace integral quadratured on [0, t_max] (n_t nodes).
double laplace_consistency_check(const FiniteOperator& A,
                                 const ContourSpec& spec, double delta, cplx z,
                                 double t_max, int n_t);

}  // namespace fracint
