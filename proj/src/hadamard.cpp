#include "fracint/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracint/complex_gamma.hpp"

namespace fracint {

namespace {

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

// Lagrange basis on nodes {0,1,2,3} in monomial coefficients.
constexpr double kLag[4][4] = {
    {1.0, -11.0 / 6.0, 1.0, -1.0 / 6.0},
    {0.0, 3.0, -2.5, 0.5},
    {0.0, -1.5, 2.0, -0.5},
    {0.0, 1.0 / 3.0, -0.5, 1.0 / 6.0}};

double lagrange_eval(int q, double xi) {
  return kLag[q][0] + xi * (kLag[q][1] + xi * (kLag[q][2] + xi * kLag[q][3]));
}

void require_log_grid(const SampledFunction& f, const char* who) {
  f.validate();
  if (f.grid.kind != GridKind::open_weighted || !f.grid.geometric)
    throw std::invalid_argument(std::string(who) +
                                ": geometric open-weighted grid required");
}

// Number of lattice cells worth integrating: all of the grid range unless
// the kernel envelope u^{Re a - 1} e^{-Re mu u} has decayed to nothing.
std::size_t cell_count(cplx alpha, cplx mu, double dl, std::size_t n) {
  std::size_t cap = n + 1;
  if (mu.real() <= 0.0) return cap;
  double peak = -1e300;
  for (std::size_t k = 1; k <= cap; ++k) {
    double u = double(k) * dl;
    double env = (alpha.real() - 1.0) * std::log(u) - mu.real() * u;
    peak = std::max(peak, env);
    if (u * mu.real() > 5.0 && env < peak - 45.0) return k;
  }
  return cap;
}

// Stencil sample indices for cell k (cell 0 is one-sided to avoid j = -1).
void stencil_of_cell(std::size_t k, std::size_t idx[4]) {
  std::size_t base = (k == 0) ? 0 : k - 1;
  for (int q = 0; q < 4; ++q) idx[q] = base + q;
}

// Moment-exact weights: kernel u^{a-1} integrated in closed form / GL
// against the cubic model of g(u) = e^{-mu u} f; the exponential is merged
// into the sample weights afterwards.
std::vector<cplx> build_weights_moment(cplx alpha, cplx mu, double dl,
                                       std::size_t cells) {
  std::vector<cplx> W(cells + 3, cplx(0.0, 0.0));
  std::size_t idx[4];
  {
    cplx mom[4];
    for (int m = 0; m < 4; ++m) mom[m] = cpow_pos(dl, alpha) / (alpha + double(m));
    stencil_of_cell(0, idx);
    for (int q = 0; q < 4; ++q) {
      cplx w(0.0, 0.0);
      for (int m = 0; m < 4; ++m) w += kLag[q][m] * mom[m];
      W[idx[q]] += w;
    }
  }
  for (std::size_t k = 1; k < cells; ++k) {
    stencil_of_cell(k, idx);
    double u0 = double(k) * dl;
    for (int g = 0; g < kGL; ++g) {
      double u = u0 + dl * kGLx[g];
      cplx ker = kGLw[g] * dl * cpow_pos(u, alpha - 1.0);
      double xi = u / dl - double(k - 1);
      for (int q = 0; q < 4; ++q) W[idx[q]] += ker * lagrange_eval(q, xi);
    }
  }
  for (std::size_t j = 0; j < W.size(); ++j)
    W[j] *= std::exp(-mu * (double(j) * dl));
  return W;
}

// Bochner-route weights: the full kernel u^{a-1} e^{-mu u} is sampled at
// Gauss-Legendre nodes against the cubic orbit model; the singular first
// cell uses dyadically graded panels.
std::vector<cplx> build_weights_bochner(cplx alpha, cplx mu, double dl,
                                        std::size_t cells) {
  std::vector<cplx> W(cells + 3, cplx(0.0, 0.0));
  std::size_t idx[4];
  auto add_panel = [&](std::size_t k, double a, double b) {
    stencil_of_cell(k, idx);
    double off = (k == 0) ? 0.0 : double(k - 1);
    for (int g = 0; g < kGL; ++g) {
      double u = a + (b - a) * kGLx[g];
      cplx ker = kGLw[g] * (b - a) * cpow_pos(u, alpha - 1.0) * std::exp(-mu * u);
      double xi = u / dl - off;
      for (int q = 0; q < 4; ++q) W[idx[q]] += ker * lagrange_eval(q, xi);
    }
  };
  double hi = dl;
  for (int l = 0; l < 52 && hi > 1e-280; ++l) {
    double lo = (l == 51) ? 0.0 : hi * 0.5;
    add_panel(0, lo, hi);
    hi = lo;
  }
  for (std::size_t k = 1; k < cells; ++k)
    add_panel(k, double(k) * dl, double(k + 1) * dl);
  return W;
}

double xc_sup_proxy(const SampledFunction& f, double c) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    m = std::max(m, std::pow(f.grid.nodes[i], c) * std::abs(f.values[i]));
  return m;
}

// int_U^infty u^{Re a - 1} e^{-rate u} du by coarse quadrature (bound only).
double kernel_tail_integral(double re_alpha, double rate, double U) {
  if (U <= 0.0) U = 1e-300;
  double span = 60.0 / rate;
  double acc = 0.0;
  for (int g = 0; g < kGL; ++g) {
    double u = U + span * kGLx[g];
    acc += kGLw[g] * span * std::pow(u, re_alpha - 1.0) * std::exp(-rate * u);
  }
  return acc;
}

HadamardApplyResult engine_apply(cplx alpha, const HadamardParams& params,
                                 const SampledFunction& f, bool bochner) {
  params.validate();
  require_log_grid(f, "hadamard_apply");
  if (!(alpha.real() > 0.0))
    throw std::invalid_argument("hadamard_apply: Re alpha > 0 required");
  const std::size_t n = f.size();
  const double dl = f.grid.log_step();
  const std::size_t cells = cell_count(alpha, params.mu, dl, n);
  std::vector<cplx> W = bochner
                            ? build_weights_bochner(alpha, params.mu, dl, cells)
                            : build_weights_moment(alpha, params.mu, dl, cells);
  const cplx rg = reciprocal_gamma(alpha);
  const bool down = params.variant == HadamardParams::Variant::J;

  HadamardApplyResult res;
  res.log_step = dl;
  res.cells = cells;
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    std::size_t avail = down ? i : (n - 1 - i);
    std::size_t jmax = std::min(W.size() - 1, avail);
    if (down) {
      for (std::size_t j = 0; j <= jmax; ++j) acc += W[j] * f.values[i - j];
    } else {
      for (std::size_t j = 0; j <= jmax; ++j) acc += W[j] * f.values[i + j];
    }
    out[i] = rg * acc;
  }
  res.out = SampledFunction(f.grid, std::move(out));

  const double rate = params.stability_rate();
  const double cf = xc_sup_proxy(f, params.c);
  const double rg_abs = std::abs(rg);
  res.tail_bound.resize(n);
  // |f(y)| <= C_f y^{-c} from the X_c-sup proxy, both variants
  for (std::size_t i = 0; i < n; ++i) {
    double U = double(down ? i : (n - 1 - i)) * dl;
    double xw = std::pow(f.grid.nodes[i], -params.c);
    res.tail_bound[i] =
        cf * xw * rg_abs * kernel_tail_integral(alpha.real(), rate, U);
  }
  return res;
}

}  // namespace

void HadamardParams::validate() const {
  if (!(p >= 1.0)) throw std::invalid_argument("hadamard params: p >= 1 required");
  if (variant == Variant::J && !(mu.real() > c))
    throw std::invalid_argument(
        "hadamard params: variant J needs Re mu > c (Hardy-type boundedness "
        "fails at the threshold Re mu = c; request rejected)");
  if (variant == Variant::I && !(mu.real() > -c))
    throw std::invalid_argument("hadamard params: variant I needs Re mu > -c");
}

double HadamardParams::stability_rate() const {
  return variant == Variant::J ? mu.real() - c : mu.real() + c;
}

HadamardApplyResult hadamard_apply(cplx alpha, const HadamardParams& params,
                                   const SampledFunction& f) {
  return engine_apply(alpha, params, f, false);
}

HadamardApplyResult hadamard_from_power_formula(cplx alpha,
                                                const HadamardParams& params,
                                                const SampledFunction& f) {
  return engine_apply(alpha, params, f, true);
}

SampledFunction dilation_semigroup_apply(double t, cplx mu,
                                         DilationDirection dir,
                                         const SampledFunction& f,
                                         double* tail_bound) {
  f.validate();
  if (!(t >= 0.0))
    throw std::invalid_argument("dilation_semigroup_apply: t >= 0 required");
  const cplx scale = std::exp(-mu * t);
  const std::size_t n = f.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  double dropped = 0.0;

  if (f.grid.kind == GridKind::closed_unit) {
    if (dir != DilationDirection::contract)
      throw std::invalid_argument(
          "dilation_semigroup_apply: closed-unit grids support the contract "
          "direction only");
    for (std::size_t i = 0; i < n; ++i)
      out[i] = scale * eval_piecewise_linear(f, f.grid.nodes[i] * std::exp(-t));
    if (tail_bound) *tail_bound = 0.0;
    return SampledFunction(f.grid, std::move(out));
  }

  require_log_grid(f, "dilation_semigroup_apply");
  const double dl = f.grid.log_step();
  const double q = t / dl;
  const std::size_t q0 = std::size_t(std::floor(q));
  const double frac = q - double(q0);
  const bool exact = frac < 1e-9 || frac > 1.0 - 1e-9;
  const std::size_t shift = exact ? std::size_t(std::llround(q)) : q0;

  auto sample = [&](std::ptrdiff_t idx) -> cplx {
    if (idx < 0 || idx >= std::ptrdiff_t(n)) return cplx(0.0, 0.0);
    return f.values[std::size_t(idx)];
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::ptrdiff_t base = (dir == DilationDirection::contract)
                              ? std::ptrdiff_t(i) - std::ptrdiff_t(shift)
                              : std::ptrdiff_t(i) + std::ptrdiff_t(shift);
    cplx v;
    if (exact) {
      v = sample(base);
    } else {
      std::ptrdiff_t next =
          (dir == DilationDirection::contract) ? base - 1 : base + 1;
      v = (1.0 - frac) * sample(base) + frac * sample(next);
    }
    out[i] = scale * v;
    bool off = (dir == DilationDirection::contract) ? base < 0
                                                    : base >= std::ptrdiff_t(n);
    if (off) dropped = std::max(dropped, std::abs(scale));
  }
  if (tail_bound) *tail_bound = dropped * sup_norm(f);
  return SampledFunction(f.grid, std::move(out));
}

double hadamard_semigroup_defect(cplx a1, cplx a2, const HadamardParams& params,
                                 const SampledFunction& f) {
  SampledFunction inner = hadamard_apply(a2, params, f).out;
  SampledFunction lhs = hadamard_apply(a1, params, inner).out;
  SampledFunction rhs = hadamard_apply(a1 + a2, params, f).out;
  return norm_of_difference(lhs, rhs, params.space_norm());
}

std::pair<SampledFunction, ConvergenceReport> hadamard_boundary_apply(
    double s, const HadamardParams& params, const SampledFunction& f,
    const std::vector<double>& sigma_schedule) {
  params.validate();
  require_log_grid(f, "hadamard_boundary_apply");
  if (s == 0.0) {
    ConvergenceReport rep;
    rep.verdict = Verdict::converged;
    rep.note = "s = 0: identity";
    if (params.p == 1.0) rep.warning = true;
    return {f, rep};
  }
  if (sigma_schedule.size() < 2)
    throw std::invalid_argument("hadamard_boundary_apply: schedule too short");
  const NormSpec norm = params.space_norm();
  std::vector<std::vector<cplx>> vals;
  std::vector<double> value_norms, diff_norms;
  SampledFunction prev;
  for (std::size_t k = 0; k < sigma_schedule.size(); ++k) {
    double sg = sigma_schedule[k];
    if (!(sg > 0.0) || (k > 0 && !(sg < sigma_schedule[k - 1])))
      throw std::invalid_argument("hadamard_boundary_apply: bad schedule");
    SampledFunction v = hadamard_apply(cplx(sg, s), params, f).out;
    value_norms.push_back(evaluate_norm(v, norm));
    if (k > 0) diff_norms.push_back(norm_of_difference(v, prev, norm));
    vals.push_back(v.values);
    prev = std::move(v);
  }
  ConvergenceReport rep =
      classify_sigma_limit(sigma_schedule, diff_norms, value_norms);
  if (params.p == 1.0) {
    rep.warning = true;
    rep.note += (rep.note.empty() ? "" : "; ");
    rep.note += "p = 1: boundary group not guaranteed (needs 1 < p < inf)";
  }
  SampledFunction limit(f.grid, richardson_vector(sigma_schedule, vals));
  return {std::move(limit), rep};
}

SampledFunction cesaro_power(int n, const SampledFunction& f) {
  if (n < 1) throw std::invalid_argument("cesaro_power: n >= 1 required");
  HadamardParams params;  // mu = 1, c = 1/p = 0.5: plain L^2
  return hadamard_apply(cplx(double(n), 0.0), params, f).out;
}

SampledFunction cesaro_boyd_form(int n, const SampledFunction& f) {
  if (n < 1) throw std::invalid_argument("cesaro_boyd_form: n >= 1 required");
  require_log_grid(f, "cesaro_boyd_form");
  const std::size_t N = f.size();
  const double dl = f.grid.log_step();
  const std::size_t cells =
      cell_count(cplx(double(n), 0.0), cplx(1.0, 0.0), dl, N);

  // F_p(s) = s * sum_{j<=p} (p!/j!) (ln 1/s)^j differentiates to
  // -(ln 1/s)^p... up to sign; cell integrals of u^p ds follow from its
  // endpoint differences.
  const int pmax = (n - 1) + 3;
  std::vector<double> fact(std::size_t(pmax) + 1, 1.0);
  for (int j = 1; j <= pmax; ++j) fact[j] = fact[j - 1] * double(j);
  auto Fp = [&](int p, double u) {
    double s = std::exp(-u);
    double acc = 0.0, upow = 1.0;
    for (int j = 0; j <= p; ++j) {
      acc += fact[p] / fact[j] * upow;
      upow *= u;
    }
    return s * acc;
  };
  auto Ip = [&](int p, double u_lo, double u_hi) {
    return Fp(p, u_lo) - Fp(p, u_hi);
  };

  std::vector<double> W(cells + 3, 0.0);
  std::size_t idx[4];
  for (std::size_t k = 0; k < cells; ++k) {
    stencil_of_cell(k, idx);
    double off = (k == 0) ? 0.0 : double(k - 1);
    for (int q = 0; q < 4; ++q) {
      // expand l_q((u - off*dl)/dl) into powers of u
      double b[4] = {0, 0, 0, 0};
      for (int m = 0; m < 4; ++m) {
        double binom = 1.0;
        for (int r = 0; r <= m; ++r) {
          b[r] += kLag[q][m] * binom * std::pow(-off * dl, double(m - r)) /
                  std::pow(dl, double(m));
          binom = binom * double(m - r) / double(r + 1);
        }
      }
      double w = 0.0;
      for (int r = 0; r < 4; ++r)
        w += b[r] * Ip(n - 1 + r, double(k) * dl, double(k + 1) * dl);
      W[idx[q]] += w;
    }
  }
  const double inv_fact = 1.0 / fact[n - 1];
  std::vector<cplx> out(N, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < N; ++i) {
    cplx acc(0.0, 0.0);
    std::size_t jmax = std::min(W.size() - 1, i);
    for (std::size_t j = 0; j <= jmax; ++j) acc += W[j] * f.values[i - j];
    out[i] = inv_fact * acc;
  }
  return SampledFunction(f.grid, std::move(out));
}

double favard_inclusion_check(double alpha, const SampledFunction& f,
                              const std::vector<double>& t_list) {
  f.validate();
  if (f.grid.kind != GridKind::closed_unit)
    throw std::invalid_argument(
        "favard_inclusion_check: closed-unit grid required");
  double sem = holder_seminorm(f, alpha);
  if (sem == 0.0) {
    bool constant = true;
    for (const cplx& v : f.values) constant = constant && (v == f.values[0]);
    if (constant) return 0.0;  // T(t)f = f for constants
    throw std::invalid_argument("favard_inclusion_check: zero seminorm");
  }
  double best = 0.0;
  for (double t : t_list) {
    if (!(t > 0.0))
      throw std::invalid_argument("favard_inclusion_check: t_list must be > 0");
    SampledFunction g = dilation_semigroup_apply(t, cplx(0.0, 0.0),
                                                 DilationDirection::contract, f);
    double num = norm_of_difference(g, f, NormSpec::sup_spec());
    best = std::max(best, std::pow(t, -alpha) * num / sem);
  }
  return best;
}

}  // namespace fracint
