#include "fracint/spectral_split.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "spectral_oracles.hpp"

using namespace fracint;

TEST_CASE("orientation canary: diag(-2,3) before anything else") {
  // The one implicit convention in the contour is its orientation; this
  // fixture pins the sign before any other spectral test runs.
  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);

  Matrix P = projection_P(A, spec, 1.0);
  CHECK(std::abs(P(0, 0) - 1.0) < 1e-8);
  CHECK(std::abs(P(1, 1)) < 1e-8);
  CHECK(std::abs(P(0, 1)) + std::abs(P(1, 0)) < 1e-8);

  Matrix T1 = contour_T1(A, 1.0, spec, 1.0);
  CHECK(std::abs(T1(0, 0) - std::exp(-2.0)) < 1e-8);
  CHECK(std::abs(T1(1, 1)) < 1e-8);

  Matrix T2 = contour_T2(A, 1.0, spec, 1.0);
  CHECK(std::abs(T2(0, 0)) < 1e-8);
  CHECK(std::abs(T2(1, 1) - std::exp(-3.0)) < 1e-8);
}

TEST_CASE("resolvent: diagonal closed forms and the residual identity") {
  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  Vector x(2);
  x << cplx(1, 0), cplx(1, 0);
  Vector y0 = resolvent_apply(A, cplx(0.0, 0.0), x);
  CHECK(std::abs(y0(0) - cplx(0.5, 0.0)) < 1e-14);
  CHECK(std::abs(y0(1) - cplx(-1.0 / 3.0, 0.0)) < 1e-14);
  Vector y1 = resolvent_apply(A, cplx(1.0, 0.0), x);
  CHECK(std::abs(y1(0) - cplx(1.0 / 3.0, 0.0)) < 1e-14);
  CHECK(std::abs(y1(1) - cplx(-0.5, 0.0)) < 1e-14);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  FiniteOperator B;
  B.A = Matrix(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) B.A(i, j) = cplx(nd(rng), nd(rng));
  Vector rhs(5);
  for (int i = 0; i < 5; ++i) rhs(i) = cplx(nd(rng), nd(rng));
  cplx lam(7.0, 3.0);
  Vector y = resolvent_apply(B, lam, rhs);
  Matrix M = lam * Matrix::Identity(5, 5) - B.A;
  CHECK((M * y - rhs).norm() <=
        1e-12 * (std::abs(lam) + B.A.norm()) * y.norm() + 1e-14);

  CHECK_THROWS_AS(resolvent_apply(A, cplx(3.0, 0.0), x), std::invalid_argument);
  CHECK_THROWS_AS(resolvent_apply(A, cplx(3.0, 5e-11), x), std::invalid_argument);
}

TEST_CASE("contour semigroups match eigenprojection oracles") {
  FiniteOperator A =
      FiniteOperator::from_diagonal({cplx(-1, 1), cplx(-1, -1), cplx(2, 0)});
  SpectrumInfo info = analyze_spectrum(A, 0.9);
  ContourSpec spec = ContourSpec::defaults_for(info, 0.9);
  Matrix T1 = contour_T1(A, 0.5, spec, 0.9);
  CHECK(std::abs(T1(0, 0) - std::exp(cplx(-0.5, 0.5))) < 1e-8);
  CHECK(std::abs(T1(1, 1) - std::exp(cplx(-0.5, -0.5))) < 1e-8);
  CHECK(std::abs(T1(2, 2)) < 1e-8);

  // semigroup property at (0.3, 0.7)
  Matrix a = contour_T1(A, 0.3, spec, 0.9);
  Matrix b = contour_T1(A, 0.7, spec, 0.9);
  Matrix c = contour_T1(A, 1.0, spec, 0.9);
  CHECK((a * b - c).norm() <= 1e-8);
  Matrix a2 = contour_T2(A, 0.3, spec, 0.9);
  Matrix b2 = contour_T2(A, 0.7, spec, 0.9);
  Matrix c2 = contour_T2(A, 1.0, spec, 0.9);
  CHECK((a2 * b2 - c2).norm() <= 1e-8);

  CHECK_THROWS_AS(contour_T1(A, 0.0, spec, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(contour_T1(A, -1.0, spec, 0.9), std::invalid_argument);
}

TEST_CASE("T2 tends to the complementary projection as t -> 0+") {
  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);
  Matrix Q = Matrix::Zero(2, 2);
  Q(1, 1) = 1.0;  // I - P
  double prev = 1e300;
  for (double t : {0.1, 0.01, 0.001}) {
    double d = (contour_T2(A, t, spec, 1.0) - Q).norm();
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev <= 5e-3);
}

TEST_CASE("projection on the upper-triangular example and degenerate splits") {
  FiniteOperator B;
  B.A = Matrix(2, 2);
  B.A << cplx(-2, 0), cplx(1, 0), cplx(0, 0), cplx(3, 0);
  SpectrumInfo info = analyze_spectrum(B, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);
  Matrix P = projection_P(B, spec, 1.0);
  CHECK(std::abs(P(0, 0) - 1.0) < 1e-8);
  CHECK(std::abs(P(0, 1) + 0.2) < 1e-8);
  CHECK(std::abs(P(1, 0)) < 1e-8);
  CHECK(std::abs(P(1, 1)) < 1e-8);

  FiniteOperator L = FiniteOperator::from_diagonal({cplx(-2, 1), cplx(-3, -1)});
  SpectrumInfo li = analyze_spectrum(L, 1.0);
  Matrix PL = projection_P(L, ContourSpec::defaults_for(li, 1.0), 1.0);
  CHECK((PL - Matrix::Identity(2, 2)).norm() < 1e-8);

  FiniteOperator R = FiniteOperator::from_diagonal({cplx(2, 1), cplx(3, -1)});
  SpectrumInfo ri = analyze_spectrum(R, 1.0);
  Matrix PR = projection_P(R, ContourSpec::defaults_for(ri, 1.0), 1.0);
  CHECK(PR.norm() < 1e-8);
}

TEST_CASE("split spaces: bases, spectra, and dimension count") {
  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);
  SplitSpaces ss = split_spaces(A, projection_P(A, spec, 1.0));
  CHECK(ss.basis1.cols() == 1);
  CHECK(ss.basis2.cols() == 1);
  CHECK(std::abs(ss.spectrum1(0) - cplx(-2, 0)) < 1e-8);
  CHECK(std::abs(ss.spectrum2(0) - cplx(3, 0)) < 1e-8);
  CHECK(std::abs(std::abs(ss.basis1(0, 0)) - 1.0) < 1e-8);

  FiniteOperator B;
  B.A = Matrix(2, 2);
  B.A << cplx(-2, 0), cplx(1, 0), cplx(0, 0), cplx(3, 0);
  SplitSpaces sb = split_spaces(
      B, projection_P(B, ContourSpec::defaults_for(analyze_spectrum(B, 1.0), 1.0),
                      1.0));
  CHECK(sb.basis1.cols() + sb.basis2.cols() == 2);
  // E1 = span{e1}; E2 = span{(1,5)}/sqrt(26)
  CHECK(std::abs(std::abs(sb.basis1(0, 0)) - 1.0) < 1e-7);
  CHECK(std::abs(std::abs(sb.basis2(0, 0)) - 1.0 / std::sqrt(26.0)) < 1e-7);
  CHECK(std::abs(std::abs(sb.basis2(1, 0)) - 5.0 / std::sqrt(26.0)) < 1e-7);
  CHECK(std::abs(sb.spectrum1(0) - cplx(-2, 0)) < 1e-7);
  CHECK(std::abs(sb.spectrum2(0) - cplx(3, 0)) < 1e-7);

  Matrix bad = 0.5 * Matrix::Identity(2, 2);
  CHECK_THROWS_AS(split_spaces(A, bad), std::invalid_argument);
}

TEST_CASE("random sections: oracle equivalence and contour independence") {
  std::mt19937_64 rng(20240809);
  for (int trial = 0; trial < 5; ++trial) {
    spectral_fixtures::SplitFixture fx =
        spectral_fixtures::random_split_operator(rng, 6, 1.0, trial % 2 == 1);
    SpectrumInfo info = analyze_spectrum(fx.op, 1.0);
    ContourSpec spec = ContourSpec::defaults_for(info, 1.0);

    Matrix P = projection_P(fx.op, spec, 1.0);
    Matrix Po = spectral_fixtures::oracle_projection(fx);
    CHECK((P - Po).norm() <= 1e-7);
    CHECK((P * P - P).norm() <= 1e-8);
    CHECK((P * fx.op.A - fx.op.A * P).norm() <= 1e-8);

    for (double t : {0.1, 1.0, 2.0}) {
      CHECK((contour_T1(fx.op, t, spec, 1.0) -
             spectral_fixtures::oracle_T1(fx, t))
                .norm() <= 1e-7);
      CHECK((contour_T2(fx.op, t, spec, 1.0) -
             spectral_fixtures::oracle_T2(fx, t))
                .norm() <= 1e-7);
    }

    ContourSpec other = spec;
    other.r = 0.31;
    other.beta = spec.beta - 0.13;
    CHECK((projection_P(fx.op, other, 1.0) - P).norm() <= 1e-8);
    CHECK((contour_T1(fx.op, 1.0, other, 1.0) - contour_T1(fx.op, 1.0, spec, 1.0))
              .norm() <= 1e-8);
  }
}

TEST_CASE("complementarity on diagonal operators") {
  FiniteOperator A =
      FiniteOperator::from_diagonal({cplx(-2, 0.5), cplx(3, -1), cplx(-4, 2)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  Matrix P = projection_P(A, ContourSpec::defaults_for(info, 1.0), 1.0);
  FiniteOperator N;
  N.A = -A.A;
  SpectrumInfo ni = analyze_spectrum(N, 1.0);
  Matrix Pn = projection_P(N, ContourSpec::defaults_for(ni, 1.0), 1.0);
  CHECK((P + Pn - Matrix::Identity(3, 3)).norm() <= 1e-8);
}

TEST_CASE("laplace consistency on E1") {
  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);
  CHECK(laplace_consistency_check(A, spec, 1.0, cplx(1, 0), 20.0, 400) <= 1e-6);
  CHECK(laplace_consistency_check(A, spec, 1.0, cplx(2, 1), 20.0, 400) <= 1e-6);
  CHECK(laplace_consistency_check(A, spec, 1.0, cplx(0.1, 0), 20.0, 400) <= 1e-4);
  CHECK_THROWS_AS(laplace_consistency_check(A, spec, 1.0, cplx(-1, 0), 20.0, 400),
                  std::invalid_argument);
  CHECK_THROWS_AS(laplace_consistency_check(A, spec, 1.0, cplx(1, 0), 1.0, 400),
                  numerical_error);  // t_max tail above tolerance
}

TEST_CASE("hypothesis violations are rejected, not projected") {
  FiniteOperator bad = FiniteOperator::from_diagonal({cplx(0.5, 0), cplx(3, 0)});
  CHECK_THROWS_AS(analyze_spectrum(bad, 1.0), std::invalid_argument);

  FiniteOperator A = FiniteOperator::from_diagonal({cplx(-2, 0), cplx(3, 0)});
  SpectrumInfo info = analyze_spectrum(A, 1.0);
  ContourSpec spec = ContourSpec::defaults_for(info, 1.0);
  ContourSpec wide = spec;
  wide.beta = 3.1;  // past the left spectrum's angular margin
  CHECK_THROWS_AS(projection_P(FiniteOperator::from_diagonal(
                                   {cplx(-1.5, 3.0), cplx(3, 0)}),
                               wide, 1.0),
                  std::invalid_argument);

  ContourSpec strict = spec;
  strict.auto_extend = false;
  strict.R = 10.0;
  CHECK_THROWS_AS(projection_P(A, strict, 1.0, 1e-9), numerical_error);
  ContourSpec badr = spec;
  badr.r = 1.5;  // >= delta
  CHECK_THROWS_AS(projection_P(A, badr, 1.0), std::invalid_argument);
}
