#include "fracint/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace fracint {

double sup_norm(const SampledFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double weighted_lp_norm(const SampledFunction& f, double c, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("weighted_lp_norm: p >= 1 required");
  const auto& x = f.grid.nodes;
  const std::size_t n = x.size();
  double acc = 0.0;
  const double cp = c * p;

  if (f.grid.kind == GridKind::open_weighted && f.grid.geometric) {
    // trapezoid in u = ln x of |e^{cu} f|^p
    auto integrand = [&](std::size_t i) {
      return std::pow(x[i], cp) * std::pow(std::abs(f.values[i]), p);
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double du = std::log(x[i + 1] / x[i]);
      acc += 0.5 * du * (integrand(i) + integrand(i + 1));
    }
    return std::pow(acc, 1.0 / p);
  }

  // integrate x^{cp-1} |f|^p dx in x; the first closed-grid cell starts at 0
  auto integrand = [&](std::size_t i) {
    return std::pow(x[i], cp - 1.0) * std::pow(std::abs(f.values[i]), p);
  };
  std::size_t start = 0;
  if (x[0] == 0.0) {
    double f0 = std::abs(f.values[0]);
    if (cp <= 0.0) {
      if (f0 > 0.0)
        throw weight_singularity_error(
            "weighted_lp_norm: non-integrable weight at x=0 (c*p <= 0)");
      if (cp + p <= 0.0)
        throw weight_singularity_error(
            "weighted_lp_norm: weight singularity too strong at x=0");
      // f vanishes linearly on the first cell: |f|^p ~ B (x/x1)^p
      double B = std::pow(std::abs(f.values[1]), p);
      acc += B * std::pow(x[1], cp) / (cp + p);
    } else if (cp >= 1.0) {
      double w0 = (cp == 1.0) ? std::pow(f0, p) : 0.0;
      acc += 0.5 * x[1] * (w0 + integrand(1));
    } else {
      // 0 < cp < 1: weight integrable but unbounded; integrate the linear
      // model of |f|^p against x^{cp-1} on [0, x1] in closed form
      double A = std::pow(f0, p), B = std::pow(std::abs(f.values[1]), p);
      acc += std::pow(x[1], cp) * (A / cp + (B - A) / (cp + 1.0));
    }
    start = 1;
  }
  for (std::size_t i = start; i + 1 < n; ++i)
    acc += 0.5 * (x[i + 1] - x[i]) * (integrand(i) + integrand(i + 1));
  return std::pow(acc, 1.0 / p);
}

namespace {

double pair_scan_max(const SampledFunction& f, double alpha, double delta,
                     bool adjacent_only, int threads) {
  const auto& x = f.grid.nodes;
  const std::size_t n = x.size();
  auto scan_rows = [&](std::size_t lo, std::size_t hi) {
    double m = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      std::size_t jmax = adjacent_only ? std::min(i + 2, n) : n;
      for (std::size_t j = i + 1; j < jmax; ++j) {
        double gap = x[j] - x[i];
        if (delta > 0.0 && gap > delta * (1.0 + 1e-12)) break;
        double q = std::abs(f.values[j] - f.values[i]) / std::pow(gap, alpha);
        m = std::max(m, q);
      }
    }
    return m;
  };
  if (threads <= 1 || n < 256) return scan_rows(0, n);
  int nt = std::min<int>(threads, int(std::thread::hardware_concurrency()));
  nt = std::max(nt, 1);
  std::vector<double> part(nt, 0.0);
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = n * std::size_t(t) / std::size_t(nt);
    std::size_t hi = n * std::size_t(t + 1) / std::size_t(nt);
    pool.emplace_back([&, t, lo, hi] { part[t] = scan_rows(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return *std::max_element(part.begin(), part.end());
}

}  // namespace

double holder_seminorm(const SampledFunction& f, double alpha,
                       bool adjacent_only, int threads) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("holder_seminorm: alpha in (0,1) required");
  if (f.grid.kind != GridKind::closed_unit)
    throw std::invalid_argument("holder_seminorm: closed-unit grid required");
  return pair_scan_max(f, alpha, 0.0, adjacent_only, threads);
}

double little_holder_modulus(const SampledFunction& f, double alpha,
                             double delta) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("little_holder_modulus: alpha in (0,1) required");
  if (!(delta > 0.0))
    throw std::invalid_argument("little_holder_modulus: delta > 0 required");
  return pair_scan_max(f, alpha, delta, false, 1);
}

NormSpec NormSpec::weighted(double c, double p) {
  NormSpec s;
  s.kind = Kind::weighted_lp;
  s.c = c;
  s.p = p;
  s.validate();
  return s;
}

NormSpec NormSpec::holder(double alpha) {
  NormSpec s;
  s.kind = Kind::holder_seminorm;
  s.alpha = alpha;
  s.validate();
  return s;
}

NormSpec NormSpec::little_holder(double alpha, double delta) {
  NormSpec s;
  s.kind = Kind::little_holder_modulus;
  s.alpha = alpha;
  s.delta = delta;
  s.validate();
  return s;
}

void NormSpec::validate() const {
  switch (kind) {
    case Kind::sup:
      break;
    case Kind::weighted_lp:
      if (!(p >= 1.0)) throw std::invalid_argument("norm spec: p >= 1 required");
      break;
    case Kind::holder_seminorm:
      if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("norm spec: alpha in (0,1) required");
      break;
    case Kind::little_holder_modulus:
      if (!(alpha > 0.0 && alpha < 1.0) || !(delta > 0.0))
        throw std::invalid_argument("norm spec: need alpha in (0,1), delta > 0");
      break;
  }
}

std::string NormSpec::name() const {
  switch (kind) {
    case Kind::sup: return "sup";
    case Kind::weighted_lp: return "weighted_lp";
    case Kind::holder_seminorm: return "holder_seminorm";
    case Kind::little_holder_modulus: return "little_holder_modulus";
  }
  return "?";
}

double evaluate_norm(const SampledFunction& f, const NormSpec& spec,
                     int threads) {
  spec.validate();
  switch (spec.kind) {
    case NormSpec::Kind::sup: return sup_norm(f);
    case NormSpec::Kind::weighted_lp: return weighted_lp_norm(f, spec.c, spec.p);
    case NormSpec::Kind::holder_seminorm:
      return holder_seminorm(f, spec.alpha, false, threads);
    case NormSpec::Kind::little_holder_modulus:
      return little_holder_modulus(f, spec.alpha, spec.delta);
  }
  return 0.0;
}

double norm_of_difference(const SampledFunction& f, const SampledFunction& g,
                          const NormSpec& spec, int threads) {
  if (!f.grid.same_nodes(g.grid))
    throw std::invalid_argument("norm_of_difference: grid mismatch");
  SampledFunction d = f;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= g.values[i];
  return evaluate_norm(d, spec, threads);
}

}  // namespace fracint
