#include "fracint/cli_run.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fracint/boundary_diag.hpp"
#include "fracint/hadamard.hpp"
#include "fracint/presets.hpp"
#include "fracint/riemann_liouville.hpp"
#include "fracint/serialize.hpp"
#include "fracint/spectral_split.hpp"

namespace fracint {

using nlohmann::json;

const char* const kVerbList[] = {
    "rl-apply",         "rl-boundary",   "rl-defect",      "rl-norm-sup",
    "rl-norm-l2",       "rl-norm-holder", "rl-embed-check", "hadamard-apply",
    "hadamard-boundary", "hadamard-defect", "cesaro-power",  "cesaro-boyd",
    "favard-check",     "dilation-apply", "spectral-split", "contour-semigroup",
    "laplace-check",    "diag-example",  "sweep"};
const std::size_t kVerbCount = sizeof(kVerbList) / sizeof(kVerbList[0]);

namespace {

// Resolves a config value, writing the default back so that every
// parameter the run used appears in the echoed metadata.
template <class T>
T resolve(json& j, const std::string& key, T def) {
  if (!j.contains(key)) j[key] = def;
  return j.at(key).get<T>();
}

json& subobject(json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_object()) j[key] = json::object();
  return j.at(key);
}

Grid grid_from_config(json& cfg) {
  json& g = subobject(cfg, "grid");
  std::string kind = resolve<std::string>(g, "kind", "uniform");
  std::size_t n = resolve<std::size_t>(g, "n", 1024);
  if (kind == "uniform") return Grid::closed_uniform(n);
  if (kind == "geometric") {
    double a = resolve<double>(g, "a", 1.0);
    double x_min = resolve<double>(g, "x_min", 1e-10);
    return Grid::open_geometric(n, a, x_min);
  }
  throw std::invalid_argument("grid.kind must be uniform or geometric");
}

SampledFunction function_from_config(json& cfg, const Grid& grid) {
  json& f = subobject(cfg, "function");
  if (f.contains("csv")) {
    std::ifstream is(f.at("csv").get<std::string>());
    if (!is) throw std::invalid_argument("function.csv: cannot open file");
    return read_function_csv(is, grid.kind);
  }
  PresetSpec spec;
  spec.name = resolve<std::string>(f, "preset", "one");
  spec.beta = resolve<double>(f, "beta", 1.0);
  spec.center = resolve<double>(f, "center", 0.5);
  spec.width = resolve<double>(f, "width", 0.25);
  spec.alpha = resolve<double>(f, "alpha", 0.5);
  return make_preset(spec, grid);
}

NormSpec norm_from_config(json& cfg) {
  json& n = subobject(cfg, "norm");
  std::string kind = resolve<std::string>(n, "kind", "sup");
  if (kind == "sup") return NormSpec::sup_spec();
  if (kind == "weighted_lp")
    return NormSpec::weighted(resolve<double>(n, "c", 0.5),
                              resolve<double>(n, "p", 2.0));
  if (kind == "holder")
    return NormSpec::holder(resolve<double>(n, "alpha", 0.5));
  if (kind == "little_holder")
    return NormSpec::little_holder(resolve<double>(n, "alpha", 0.5),
                                   resolve<double>(n, "delta", 0.1));
  throw std::invalid_argument("norm.kind unknown: " + kind);
}

HadamardParams hadamard_params_from_config(json& cfg) {
  json& op = subobject(cfg, "op");
  HadamardParams p;
  p.mu = cplx(resolve<double>(op, "mu_re", 1.0), resolve<double>(op, "mu_im", 0.0));
  p.c = resolve<double>(op, "c", 0.5);
  p.p = resolve<double>(op, "p", 2.0);
  std::string var = resolve<std::string>(op, "variant", "J");
  if (var == "J")
    p.variant = HadamardParams::Variant::J;
  else if (var == "I")
    p.variant = HadamardParams::Variant::I;
  else
    throw std::invalid_argument("op.variant must be J or I");
  p.validate();
  return p;
}

std::vector<double> sigma_schedule_from_config(json& cfg) {
  if (!cfg.contains("sigma_schedule"))
    cfg["sigma_schedule"] = default_sigma_schedule();
  return cfg.at("sigma_schedule").get<std::vector<double>>();
}

cplx order_from_config(json& cfg, const char* re_key, const char* im_key,
                       double re_def, double im_def) {
  json& op = subobject(cfg, "op");
  return cplx(resolve<double>(op, re_key, re_def),
              resolve<double>(op, im_key, im_def));
}

FiniteOperator matrix_from_config(json& cfg) {
  json& m = subobject(cfg, "matrix");
  std::size_t n = 0;
  std::vector<cplx> entries;
  if (m.contains("csv")) {
    std::ifstream is(m.at("csv").get<std::string>());
    if (!is) throw std::invalid_argument("matrix.csv: cannot open file");
    entries = read_matrix_csv(is, n);
  } else if (m.contains("json")) {
    std::ifstream is(m.at("json").get<std::string>());
    if (!is) throw std::invalid_argument("matrix.json: cannot open file");
    json mj;
    is >> mj;
    entries = matrix_from_json(mj, n);
  } else if (m.contains("inline")) {
    entries = matrix_from_json(m.at("inline"), n);
  } else {
    throw std::invalid_argument("matrix: provide csv, json, or inline");
  }
  FiniteOperator A;
  A.A = Matrix(Eigen::Index(n), Eigen::Index(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      A.A(Eigen::Index(i), Eigen::Index(j)) = entries[i * n + j];
  A.validate();
  return A;
}

ContourSpec contour_from_config(json& cfg, const SpectrumInfo& info,
                                double delta) {
  ContourSpec def = ContourSpec::defaults_for(info, delta);
  json& c = subobject(subobject(cfg, "op"), "contour");
  ContourSpec spec;
  spec.r = resolve<double>(c, "r", def.r);
  spec.beta = resolve<double>(c, "beta", def.beta);
  spec.R = resolve<double>(c, "R", def.R);
  spec.n_ray = resolve<int>(c, "n_ray", def.n_ray);
  spec.n_arc = resolve<int>(c, "n_arc", def.n_arc);
  spec.auto_extend = resolve<bool>(c, "auto_extend", true);
  return spec;
}

struct VerbResult {
  json payload;                      // result block for JSON output
  std::optional<SampledFunction> fn;  // primary table for CSV output
  double scalar = std::numeric_limits<double>::quiet_NaN();
  int exit_code = kExitOk;

  void set_function(SampledFunction f) { fn = std::move(f); }
};

int verdict_exit(json& cfg, const ConvergenceReport& rep) {
  bool demand = resolve<bool>(cfg, "require_convergence", true);
  if (demand && rep.verdict != Verdict::converged) return kExitVerdict;
  return kExitOk;
}

VerbResult run_verb(const std::string& verb, json& cfg);

VerbResult run_sweep(json& cfg) {
  json& sw = subobject(cfg, "sweep");
  std::string axis = sw.at("axis").get<std::string>();
  std::vector<double> values = sw.at("values").get<std::vector<double>>();
  std::string verb = sw.at("verb").get<std::string>();
  if (values.empty()) throw std::invalid_argument("sweep.values is empty");

  VerbResult out;
  json rows = json::array();
  std::vector<double> xs, ys;
  int worst_exit = kExitOk;
  for (double v : values) {
    json sub = cfg;
    sub.erase("sweep");
    sub["verb"] = verb;
    // axis is a dotted path into the config, e.g. op.z_re or grid.n
    json* slot = &sub;
    std::string path = axis;
    for (std::size_t pos = path.find('.'); pos != std::string::npos;
         pos = path.find('.')) {
      slot = &subobject(*slot, path.substr(0, pos));
      path = path.substr(pos + 1);
    }
    (*slot)[path] = v;
    VerbResult r = run_verb(verb, sub);
    worst_exit = std::max(worst_exit, r.exit_code);
    xs.push_back(v);
    ys.push_back(std::abs(r.scalar));
    json row;
    row["axis"] = v;
    row["value"] = r.scalar;
    row["slope"] = xs.size() >= 2 ? loglog_slope(xs, ys)
                                  : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(std::move(row));
  }
  out.payload["rows"] = std::move(rows);
  out.payload["axis"] = axis;
  out.payload["verb"] = verb;
  out.scalar = ys.back();
  out.exit_code = worst_exit;
  return out;
}

VerbResult run_verb(const std::string& verb, json& cfg) {
  VerbResult out;
  json& op = subobject(cfg, "op");

  if (verb == "rl-apply") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    cplx z = order_from_config(cfg, "z_re", "z_im", 1.0, 0.0);
    SampledFunction y = rl_apply(z, f);
    out.scalar = sup_norm(y);
    out.payload["sup_norm"] = out.scalar;
    out.set_function(std::move(y));
  } else if (verb == "rl-boundary") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    double s = resolve<double>(op, "s", 1.0);
    NormSpec n = norm_from_config(cfg);
    auto [limit, rep] = rl_boundary_apply(s, f, sigma_schedule_from_config(cfg), n);
    out.payload["report"] = report_to_json(rep);
    out.scalar = evaluate_norm(limit, n);
    out.payload["limit_norm"] = out.scalar;
    out.set_function(std::move(limit));
    out.exit_code = verdict_exit(cfg, rep);
  } else if (verb == "rl-defect") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    cplx z1 = order_from_config(cfg, "z_re", "z_im", 0.5, 0.0);
    cplx z2 = order_from_config(cfg, "z2_re", "z2_im", 0.5, 0.0);
    out.scalar = rl_semigroup_defect(z1, z2, f, norm_from_config(cfg));
    out.payload["defect"] = out.scalar;
  } else if (verb == "rl-norm-sup") {
    cplx z = order_from_config(cfg, "z_re", "z_im", 1.0, 0.0);
    out.scalar = rl_opnorm_sup(z);
    out.payload["opnorm_sup"] = out.scalar;
  } else if (verb == "rl-norm-l2") {
    cplx z = order_from_config(cfg, "z_re", "z_im", 0.0, 1.0);
    std::size_t N = resolve<std::size_t>(subobject(cfg, "grid"), "n", 2048);
    FractionalOrder ord = (z.real() == 0.0 && z.imag() != 0.0)
                              ? FractionalOrder::imaginary(z.imag())
                              : FractionalOrder::interior(z);
    std::optional<std::vector<double>> sched;
    if (ord.boundary) sched = sigma_schedule_from_config(cfg);
    out.scalar = rl_opnorm_l2(ord, N, sched);
    out.payload["opnorm_l2"] = out.scalar;
  } else if (verb == "rl-norm-holder") {
    Grid grid = grid_from_config(cfg);
    cplx z = order_from_config(cfg, "z_re", "z_im", 0.5, 0.0);
    double alpha = resolve<double>(op, "alpha_holder", 0.5);
    out.scalar =
        rl_opnorm_holder_estimate(z, alpha, default_holder_family(grid, alpha));
    out.payload["opnorm_holder_lower_bound"] = out.scalar;
  } else if (verb == "rl-embed-check") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    double alpha = resolve<double>(op, "alpha_holder", 0.5);
    out.scalar = rl_regularity_embedding_check(alpha, f);
    out.payload["embedding_ratio"] = out.scalar;
    out.payload["bound_2_over_gamma"] =
        2.0 * std::abs(reciprocal_gamma(cplx(alpha + 1.0, 0.0)));
  } else if (verb == "hadamard-apply") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    HadamardParams params = hadamard_params_from_config(cfg);
    cplx alpha = order_from_config(cfg, "alpha_re", "alpha_im", 1.0, 0.0);
    bool power_route = resolve<bool>(op, "power_formula_route", false);
    HadamardApplyResult r = power_route
                                ? hadamard_from_power_formula(alpha, params, f)
                                : hadamard_apply(alpha, params, f);
    out.scalar = evaluate_norm(r.out, params.space_norm());
    out.payload["space_norm"] = out.scalar;
    out.payload["max_tail_bound"] =
        *std::max_element(r.tail_bound.begin(), r.tail_bound.end());
    out.payload["cells"] = r.cells;
    out.set_function(std::move(r.out));
  } else if (verb == "hadamard-boundary") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    HadamardParams params = hadamard_params_from_config(cfg);
    double s = resolve<double>(op, "s", 1.0);
    auto [limit, rep] =
        hadamard_boundary_apply(s, params, f, sigma_schedule_from_config(cfg));
    out.payload["report"] = report_to_json(rep);
    out.scalar = evaluate_norm(limit, params.space_norm());
    out.set_function(std::move(limit));
    out.exit_code = verdict_exit(cfg, rep);
  } else if (verb == "hadamard-defect") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    HadamardParams params = hadamard_params_from_config(cfg);
    cplx a1 = order_from_config(cfg, "alpha_re", "alpha_im", 0.5, 0.0);
    cplx a2 = order_from_config(cfg, "alpha2_re", "alpha2_im", 0.5, 0.0);
    out.scalar = hadamard_semigroup_defect(a1, a2, params, f);
    out.payload["defect"] = out.scalar;
  } else if (verb == "cesaro-power" || verb == "cesaro-boyd") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    int n = resolve<int>(op, "n_power", 2);
    SampledFunction y =
        (verb == "cesaro-power") ? cesaro_power(n, f) : cesaro_boyd_form(n, f);
    out.scalar = sup_norm(y);
    out.payload["sup_norm"] = out.scalar;
    out.set_function(std::move(y));
  } else if (verb == "favard-check") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    double alpha = resolve<double>(op, "alpha_holder", 0.5);
    std::vector<double> t_list =
        cfg.contains("t_list") ? cfg.at("t_list").get<std::vector<double>>()
                               : std::vector<double>{0.25, 0.5, 1.0};
    cfg["t_list"] = t_list;
    out.scalar = favard_inclusion_check(alpha, f, t_list);
    out.payload["favard_ratio"] = out.scalar;
  } else if (verb == "dilation-apply") {
    Grid grid = grid_from_config(cfg);
    SampledFunction f = function_from_config(cfg, grid);
    double t = resolve<double>(op, "t", 1.0);
    cplx mu = cplx(resolve<double>(op, "mu_re", 0.0), resolve<double>(op, "mu_im", 0.0));
    std::string dir = resolve<std::string>(op, "direction", "contract");
    double tail = 0.0;
    SampledFunction y = dilation_semigroup_apply(
        t, mu,
        dir == "expand" ? DilationDirection::expand : DilationDirection::contract,
        f, &tail);
    out.scalar = sup_norm(y);
    out.payload["sup_norm"] = out.scalar;
    out.payload["tail_bound"] = tail;
    out.set_function(std::move(y));
  } else if (verb == "spectral-split") {
    FiniteOperator A = matrix_from_config(cfg);
    double delta = resolve<double>(op, "delta", 1.0);
    SpectrumInfo info = analyze_spectrum(A, delta);
    ContourSpec spec = contour_from_config(cfg, info, delta);
    Matrix P = projection_P(A, spec, delta);
    SplitSpaces ss = split_spaces(A, P);
    double idem = (P * P - P).norm();
    double comm = (P * A.A - A.A * P).norm();
    std::size_t n = A.dim();
    std::vector<cplx> pe(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        pe[i * n + j] = P(Eigen::Index(i), Eigen::Index(j));
    out.payload["projection"] = matrix_to_json(pe, n);
    out.payload["idempotency_defect"] = idem;
    out.payload["commutation_defect"] = comm;
    auto spectrum_json = [](const Vector& v) {
      json a = json::array();
      for (Eigen::Index i = 0; i < v.size(); ++i)
        a.push_back({v(i).real(), v(i).imag()});
      return a;
    };
    out.payload["spectrum1"] = spectrum_json(ss.spectrum1);
    out.payload["spectrum2"] = spectrum_json(ss.spectrum2);
    out.payload["dim1"] = ss.basis1.cols();
    out.payload["dim2"] = ss.basis2.cols();
    auto basis_json = [](const Matrix& B) {
      json rows = json::array();
      for (Eigen::Index i = 0; i < B.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < B.cols(); ++j)
          row.push_back({B(i, j).real(), B(i, j).imag()});
        rows.push_back(std::move(row));
      }
      return rows;
    };
    out.payload["basis1"] = basis_json(ss.basis1);
    out.payload["basis2"] = basis_json(ss.basis2);
    std::vector<double> ts =
        cfg.contains("t_list") ? cfg.at("t_list").get<std::vector<double>>()
                               : std::vector<double>{0.1, 1.0, 2.0};
    cfg["t_list"] = ts;
    json samples = json::array();
    for (double t : ts) {
      Matrix T1 = contour_T1(A, t, spec, delta);
      std::vector<cplx> te(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          te[i * n + j] = T1(Eigen::Index(i), Eigen::Index(j));
      json s;
      s["t"] = t;
      s["T1"] = matrix_to_json(te, n);
      samples.push_back(std::move(s));
    }
    out.payload["T1_samples"] = std::move(samples);
    out.scalar = idem;
  } else if (verb == "contour-semigroup") {
    FiniteOperator A = matrix_from_config(cfg);
    double delta = resolve<double>(op, "delta", 1.0);
    double t = resolve<double>(op, "t", 1.0);
    std::string which = resolve<std::string>(op, "semigroup", "T1");
    SpectrumInfo info = analyze_spectrum(A, delta);
    ContourSpec spec = contour_from_config(cfg, info, delta);
    Matrix T = (which == "T2") ? contour_T2(A, t, spec, delta)
                               : contour_T1(A, t, spec, delta);
    std::size_t n = A.dim();
    std::vector<cplx> te(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        te[i * n + j] = T(Eigen::Index(i), Eigen::Index(j));
    out.payload["matrix"] = matrix_to_json(te, n);
    out.scalar = T.norm();
    out.payload["frobenius_norm"] = out.scalar;
  } else if (verb == "laplace-check") {
    FiniteOperator A = matrix_from_config(cfg);
    double delta = resolve<double>(op, "delta", 1.0);
    cplx z = order_from_config(cfg, "z_re", "z_im", 1.0, 0.0);
    double t_max = resolve<double>(op, "t_max", 20.0);
    int n_t = resolve<int>(op, "n_t", 400);
    SpectrumInfo info = analyze_spectrum(A, delta);
    ContourSpec spec = contour_from_config(cfg, info, delta);
    out.scalar = laplace_consistency_check(A, spec, delta, z, t_max, n_t);
    out.payload["laplace_defect"] = out.scalar;
  } else if (verb == "diag-example") {
    json& dg = subobject(cfg, "diag");
    DiagonalGenerator gen;
    gen.truncation = resolve<std::size_t>(dg, "N", 2048);
    double t = resolve<double>(dg, "t", 1.0);
    std::string preset = resolve<std::string>(dg, "preset", "exponential");
    std::size_t len = resolve<std::size_t>(dg, "length", gen.truncation);
    len = std::min(len, gen.truncation);
    std::vector<cplx> x(len);
    if (preset == "unit") {
      std::size_t idx = resolve<std::size_t>(dg, "index", 5);
      if (idx < len) x[idx] = 1.0;
    } else if (preset == "exponential") {
      for (std::size_t n = 0; n < len; ++n) x[n] = std::exp(-double(n));
    } else if (preset == "polynomial") {
      for (std::size_t n = 0; n < len; ++n) x[n] = 1.0 / (double(n) + 1.0);
    } else {
      throw std::invalid_argument("diag.preset: unit|exponential|polynomial");
    }
    double theta = resolve<double>(dg, "theta", 0.0);
    SectorPoint zp{t, theta};
    zp.validate();
    DiagApplyResult ap = diag_apply(gen, zp, x);
    out.payload["any_overflow"] = ap.any_overflow;
    out.payload["upper_boundary_norm"] = upper_boundary_norm(t, x);
    std::vector<std::size_t> sched =
        dg.contains("schedule")
            ? dg.at("schedule").get<std::vector<std::size_t>>()
            : std::vector<std::size_t>{256, 512, 1024, 2048};
    dg["schedule"] = sched;
    MembershipReport mem = lower_boundary_membership(x, t, sched);
    out.payload["membership"] = membership_name(mem.verdict);
    out.payload["partial_sums"] = mem.partial_sums;
    out.scalar = out.payload["upper_boundary_norm"].get<double>();
  } else if (verb == "sweep") {
    return run_sweep(cfg);
  } else {
    throw std::invalid_argument("unknown verb: " + verb);
  }
  return out;
}

void write_artifacts(json& cfg, VerbResult& res, std::ostream& fallback) {
  std::string format = resolve<std::string>(cfg, "format", "json");
  std::string out_path = resolve<std::string>(cfg, "out", "-");

  std::ofstream file;
  std::ostream* os = &fallback;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot open output path: " + out_path);
    os = &file;
  }

  if (format == "csv") {
    std::string meta = "config: " + cfg.dump();
    if (res.fn) {
      write_function_csv(*os, *res.fn, meta);
    } else if (res.payload.contains("rows")) {
      *os << "# " << meta << "\n";
      *os << "axis,value,slope\n" << std::setprecision(17);
      for (const auto& row : res.payload.at("rows"))
        *os << row.at("axis").get<double>() << ','
            << row.at("value").get<double>() << ','
            << row.at("slope").get<double>() << '\n';
    } else {
      *os << "# " << meta << "\n";
      *os << "value\n" << std::setprecision(17) << res.scalar << "\n";
    }
  } else if (format == "json") {
    json doc;
    doc["config"] = cfg;
    doc["result"] = res.payload;
    if (res.fn) doc["result"]["function"] = function_to_json(*res.fn);
    if (std::isfinite(res.scalar)) doc["result"]["scalar"] = res.scalar;
    *os << doc.dump(2) << "\n";
  } else {
    throw std::invalid_argument("format must be csv or json");
  }
}

}  // namespace

int run_config(json& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (!cfg.contains("verb"))
      throw std::invalid_argument("config: verb is required");
    std::string verb = cfg.at("verb").get<std::string>();
    resolve<std::uint64_t>(cfg, "seed", 0);
    resolve<int>(cfg, "threads", 1);
    VerbResult res = run_verb(verb, cfg);
    write_artifacts(cfg, res, out);
    return res.exit_code;
  } catch (const verdict_error& e) {
    err << "verdict error: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const numerical_error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const gamma_pole_error& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

int run_config_text(const std::string& config_text, std::ostream& out,
                    std::ostream& err) {
  json cfg;
  try {
    cfg = json::parse(config_text);
  } catch (const std::exception& e) {
    err << "validation error: bad config JSON: " << e.what() << "\n";
    return kExitValidation;
  }
  return run_config(cfg, out, err);
}

}  // namespace fracint
