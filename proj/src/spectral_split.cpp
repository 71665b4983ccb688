#include "fracint/spectral_split.hpp"

#include <algorithm>
#include <cmath>

namespace fracint {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

constexpr int kGL = 12;
constexpr double kGLx[kGL] = {
    0.009219682876640378, 0.047941371814762571, 0.115048662902847656,
    0.206341022856691276, 0.316084250500909903, 0.437383295744265542,
    0.562616704255734458, 0.683915749499090097, 0.793658977143308724,
    0.884951337097152344, 0.952058628185237429, 0.990780317123359622};
constexpr double kGLw[kGL] = {
    0.023587668193255914, 0.053469662997659215, 0.080039164271673113,
    0.101583713361532961, 0.116746268269177404, 0.124573522906701393,
    0.124573522906701393, 0.116746268269177404, 0.101583713361532961,
    0.080039164271673113, 0.053469662997659215, 0.023587668193255914};

struct Panel {
  double lo, hi;
};

// Ray panels in rho from r outward.  Width is limited by the geometric
// resolution of R(lambda, A), by the e^{i t rho sin(beta)} oscillation, and
// stops once e^{t rho cos(beta)} (or 1/rho^2 for the projection) is spent.
std::vector<Panel> ray_panels(double r, double t, double beta, double R_eff) {
  std::vector<Panel> panels;
  const double sins = std::sin(beta);
  double rho = r;
  while (rho < R_eff) {
    double w = 0.35 * rho;
    if (t > 0.0) w = std::min(w, 2.2 / (t * sins));
    double hi = std::min(rho + w, R_eff);
    panels.push_back({rho, hi});
    rho = hi;
  }
  return panels;
}

// One LU solve per node: accumulates (1/2*pi*i) int f(lambda) R(lambda,A) dlambda
// over the oriented contour (lower ray inward, arc ccw, upper ray outward).
template <class KernelFn>
Matrix contour_integral(const Matrix& A, const ContourSpec& spec, double t,
                        double r_use, double R_eff, KernelFn kernel) {
  const auto n = A.rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix acc = Matrix::Zero(n, n);

  auto add_node = [&](cplx lambda, cplx dweight) {
    Eigen::PartialPivLU<Matrix> lu(lambda * id - A);
    Matrix R = lu.solve(id);
    acc += (kernel(lambda, R) * dweight);
  };

  const std::vector<Panel> panels = ray_panels(r_use, t, spec.beta, R_eff);
  const cplx eup = std::exp(cplx(0.0, spec.beta));
  const cplx edn = std::conj(eup);
  for (const Panel& p : panels) {
    double w = p.hi - p.lo;
    for (int q = 0; q < kGL; ++q) {
      double rho = p.lo + w * kGLx[q];
      add_node(rho * eup, kGLw[q] * w * eup);
      add_node(rho * edn, -kGLw[q] * w * edn);
    }
  }
  const int arc_panels = std::max(4, spec.n_arc / kGL);
  for (int ap = 0; ap < arc_panels; ++ap) {
    double th0 = -spec.beta + 2.0 * spec.beta * ap / arc_panels;
    double th1 = -spec.beta + 2.0 * spec.beta * (ap + 1) / arc_panels;
    for (int q = 0; q < kGL; ++q) {
      double th = th0 + (th1 - th0) * kGLx[q];
      cplx lambda = r_use * std::exp(cplx(0.0, th));
      add_node(lambda, kGLw[q] * (th1 - th0) * cplx(0.0, 1.0) * lambda);
    }
  }
  return acc / cplx(0.0, 2.0 * kPi);
}

Matrix semigroup_section(const FiniteOperator& Aop, double t,
                         const ContourSpec& spec, double delta, bool mirrored) {
  Aop.validate();
  if (!(t > 0.0))
    throw std::invalid_argument("contour semigroup: t > 0 required");
  SpectrumInfo info = analyze_spectrum(Aop, delta);
  spec.validate(delta);
  spec.validate_against(info, delta, mirrored);

  const Matrix A = mirrored ? Matrix(-Aop.A) : Aop.A;
  const double coss = std::abs(std::cos(spec.beta));
  // integrate only while e^{t rho cos beta} still matters; past that the
  // ray tail is below 1e-12 and extending further would only add panels
  double R_eff = std::max((std::log(1e12) + 8.0) / (t * coss),
                          2.0 * info.norm_bound + 2.0);
  if (!spec.auto_extend && R_eff > spec.R)
    throw numerical_error(
        "contour semigroup: truncation tail above tolerance at this t "
        "(exp(t R cos beta) too large); enlarge R or enable auto_extend");
  // shrink the arc with t so |e^{t lambda}| stays O(1) on the right bulge
  double r_use = std::min(spec.r, 2.0 / t);
  return contour_integral(A, spec, t, r_use, R_eff,
                          [&](cplx lambda, const Matrix& R) {
                            return Matrix(std::exp(t * lambda) * R);
                          });
}

}  // namespace

FiniteOperator FiniteOperator::from_diagonal(const std::vector<cplx>& eigs) {
  FiniteOperator op;
  op.A = Matrix::Zero(Eigen::Index(eigs.size()), Eigen::Index(eigs.size()));
  for (std::size_t i = 0; i < eigs.size(); ++i)
    op.A(Eigen::Index(i), Eigen::Index(i)) = eigs[i];
  op.validate();
  return op;
}

void FiniteOperator::validate() const {
  if (A.rows() == 0 || A.rows() != A.cols())
    throw std::invalid_argument("finite operator: square matrix required");
  if (!A.allFinite())
    throw std::invalid_argument("finite operator: non-finite entries");
}

SpectrumInfo analyze_spectrum(const FiniteOperator& A, double delta) {
  A.validate();
  if (!(delta > 0.0))
    throw std::invalid_argument("analyze_spectrum: delta > 0 required");
  Eigen::ComplexEigenSolver<Matrix> es(A.A, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw numerical_error("analyze_spectrum: eigensolver failed");
  SpectrumInfo info;
  info.eigenvalues = es.eigenvalues();
  info.eigenvectors = es.eigenvectors();
  info.side.resize(std::size_t(info.eigenvalues.size()));
  info.min_left_arg = kPi;
  info.min_right_arg = kPi;
  info.norm_bound = A.A.operatorNorm();
  for (Eigen::Index i = 0; i < info.eigenvalues.size(); ++i) {
    cplx lam = info.eigenvalues(i);
    if (std::abs(lam.real()) <= delta)
      throw std::invalid_argument(
          "analyze_spectrum: split hypothesis violated (|Re lambda| <= delta)");
    if (lam.real() < 0.0) {
      info.side[std::size_t(i)] = -1;
      info.min_left_arg = std::min(info.min_left_arg, std::abs(std::arg(lam)));
    } else {
      info.side[std::size_t(i)] = +1;
      info.min_right_arg = std::min(info.min_right_arg, std::abs(std::arg(-lam)));
    }
  }
  return info;
}

void ContourSpec::validate(double delta) const {
  if (!(r > 0.0 && r < delta))
    throw std::invalid_argument("contour: 0 < r < delta required");
  if (!(beta > kPi / 2.0 && beta < kPi))
    throw std::invalid_argument("contour: beta in (pi/2, pi) required");
  if (!(R > 0.0)) throw std::invalid_argument("contour: R > 0 required");
  if (n_ray < 24 || n_arc < 12)
    throw std::invalid_argument("contour: node counts too small");
}

void ContourSpec::validate_against(const SpectrumInfo& info, double delta,
                                   bool mirrored) const {
  validate(delta);
  double min_arg = mirrored ? info.min_right_arg : info.min_left_arg;
  if (!(beta < min_arg - 1e-6))
    throw std::invalid_argument(
        "contour: spectrum not left of the path (need beta < min |arg| of the "
        "enclosed part)");
  double maxmod = 0.0;
  for (Eigen::Index i = 0; i < info.eigenvalues.size(); ++i)
    maxmod = std::max(maxmod, std::abs(info.eigenvalues(i)));
  if (!(R > maxmod + 1.0))
    throw std::invalid_argument("contour: R must exceed max |lambda| + 1");
}

ContourSpec ContourSpec::defaults_for(const SpectrumInfo& info, double delta) {
  ContourSpec spec;
  spec.r = 0.5 * delta;
  double cap = std::min(info.min_left_arg, info.min_right_arg);
  spec.beta = kPi / 2.0 + 0.62 * (cap - kPi / 2.0);
  spec.beta = std::min(spec.beta, cap - 0.05);
  spec.R = std::max(1e6, 2.0 * info.norm_bound + 2.0);
  return spec;
}

Vector resolvent_apply(const FiniteOperator& A, cplx lambda, const Vector& x) {
  A.validate();
  if (x.size() != A.A.rows())
    throw std::invalid_argument("resolvent_apply: size mismatch");
  Eigen::ComplexEigenSolver<Matrix> es(A.A, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(lambda - es.eigenvalues()(i)) < 1e-10)
      throw std::invalid_argument(
          "resolvent_apply: lambda within 1e-10 of the spectrum");
  Matrix M = lambda * Matrix::Identity(A.A.rows(), A.A.cols()) - A.A;
  Eigen::PartialPivLU<Matrix> lu(M);
  Vector y = lu.solve(x);
  double res = (M * y - x).norm();
  double scale = (std::abs(lambda) + A.A.norm()) * y.norm();
  if (res > 1e-10 * std::max(scale, 1e-300))
    throw numerical_error("resolvent_apply: near-singular system");
  return y;
}

Matrix contour_T1(const FiniteOperator& A, double t, const ContourSpec& spec,
                  double delta) {
  return semigroup_section(A, t, spec, delta, /*mirrored=*/false);
}

Matrix contour_T2(const FiniteOperator& A, double t, const ContourSpec& spec,
                  double delta) {
  return semigroup_section(A, t, spec, delta, /*mirrored=*/true);
}

Matrix projection_P(const FiniteOperator& Aop, const ContourSpec& spec,
                    double delta, double tol) {
  Aop.validate();
  SpectrumInfo info = analyze_spectrum(Aop, delta);
  spec.validate(delta);
  spec.validate_against(info, delta, /*mirrored=*/false);
  // the integrand decays like ||A||/|lambda|^2 on the rays
  double R_eff = std::max(info.norm_bound / tol, 4.0 * info.norm_bound + 4.0);
  if (!spec.auto_extend && R_eff > spec.R)
    throw numerical_error(
        "projection_P: R too small for tolerance (need >= ||A||/tol)");

  const Matrix& A = Aop.A;
  auto kernel = [&](cplx lambda, const Matrix& R) {
    return Matrix(R * A / lambda);
  };
  Matrix P1 = contour_integral(A, spec, 0.0, spec.r, R_eff, kernel);
  Matrix P2 = contour_integral(A, spec, 0.0, spec.r, 2.0 * R_eff, kernel);
  // the ray tail decays like 1/R: one Richardson step removes it
  Matrix P = 2.0 * P2 - P1 + Matrix::Identity(A.rows(), A.cols());
  return P;
}

SplitSpaces split_spaces(const FiniteOperator& Aop, const Matrix& P) {
  Aop.validate();
  const auto n = Aop.A.rows();
  if (P.rows() != n || P.cols() != n)
    throw std::invalid_argument("split_spaces: projection size mismatch");
  if ((P * P - P).norm() > 1e-8 * std::max(1.0, P.norm()))
    throw std::invalid_argument("split_spaces: input fails ||P^2 - P|| <= 1e-8");

  Eigen::PartialPivLU<Matrix> lu(Aop.A);
  Matrix K = P * lu.solve(Matrix::Identity(n, n));  // P A^{-1}

  Eigen::BDCSVD<Matrix> svd(K, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = 1e-8 * sv(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thresh) {
      if (sv(i) < thresh * 100.0)
        throw numerical_error(
            "split_spaces: rank ambiguity (singular value near threshold)");
      ++rank;
    }
  }
  SplitSpaces out;
  out.basis1 = svd.matrixU().leftCols(rank);
  out.basis2 = svd.matrixV().rightCols(n - rank);  // ker(K)

  auto spectrum_of = [&](const Matrix& B) {
    Matrix compressed = B.adjoint() * Aop.A * B;
    Eigen::ComplexEigenSolver<Matrix> es(compressed, false);
    return Vector(es.eigenvalues());
  };
  if (rank > 0) out.spectrum1 = spectrum_of(out.basis1);
  if (n - rank > 0) out.spectrum2 = spectrum_of(out.basis2);
  return out;
}

double laplace_consistency_check(const FiniteOperator& A,
                                 const ContourSpec& spec, double delta, cplx z,
                                 double t_max, int n_t) {
  if (!(z.real() > 0.0))
    throw std::invalid_argument("laplace_consistency_check: Re z > 0 required");
  if (!(t_max > 0.0) || n_t < 16)
    throw std::invalid_argument("laplace_consistency_check: bad quadrature");
  SpectrumInfo info = analyze_spectrum(A, delta);
  // tail of the Laplace integrand decays like e^{-(Re z + delta) t}
  if (std::exp(-(z.real() + delta) * t_max) > 1e-8)
    throw numerical_error("laplace_consistency_check: t_max tail above tolerance");

  Matrix P = projection_P(A, spec, delta, 1e-10);
  SplitSpaces ss = split_spaces(A, P);
  const Matrix& B1 = ss.basis1;
  if (B1.cols() == 0)
    throw std::invalid_argument("laplace_consistency_check: E1 is trivial");
  Matrix A1 = B1.adjoint() * A.A * B1;
  Eigen::PartialPivLU<Matrix> lu1(A1);
  Matrix A1inv = lu1.solve(Matrix::Identity(A1.rows(), A1.cols()));
  Matrix direct = (z * Matrix::Identity(A1.rows(), A1.cols()) - A1)
                      .partialPivLu()
                      .solve(A1inv);

  // composite Gauss-Legendre in t against compressed T1 samples
  int panels = std::max(1, n_t / kGL);
  Matrix integral = Matrix::Zero(A1.rows(), A1.cols());
  for (int p = 0; p < panels; ++p) {
    double a = t_max * double(p) / panels, b = t_max * double(p + 1) / panels;
    for (int q = 0; q < kGL; ++q) {
      double t = a + (b - a) * kGLx[q];
      Matrix T1c = B1.adjoint() * contour_T1(A, t, spec, delta) * B1;
      integral += kGLw[q] * (b - a) * std::exp(-z * t) * (T1c * A1inv);
    }
  }
  return (integral - direct).norm();
}

}  // namespace fracint
