#include "fracint/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace fracint {

using nlohmann::json;

namespace {

std::vector<double> parse_csv_numbers(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    out.push_back(std::stod(cell));
  }
  return out;
}

bool is_comment_or_header(const std::string& line) {
  if (line.empty() || line[0] == '#') return true;
  for (char c : line)
    if ((c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.' ||
        c == 'e' || c == 'E' || c == ',' || c == ' ' || c == '\r')
      continue;
    else
      return true;
  return false;
}

}  // namespace

void write_function_csv(std::ostream& os, const SampledFunction& f,
                        const std::string& metadata_comment) {
  if (!metadata_comment.empty()) os << "# " << metadata_comment << "\n";
  os << "node,re,im\n" << std::setprecision(17);
  for (std::size_t i = 0; i < f.size(); ++i)
    os << f.grid.nodes[i] << ',' << f.values[i].real() << ','
       << f.values[i].imag() << '\n';
}

SampledFunction read_function_csv(std::istream& is, GridKind kind) {
  std::vector<double> nodes;
  std::vector<cplx> values;
  std::string line;
  while (std::getline(is, line)) {
    if (is_comment_or_header(line)) continue;
    auto nums = parse_csv_numbers(line);
    if (nums.empty()) continue;
    if (nums.size() < 2)
      throw std::invalid_argument("function csv: need node,re[,im] columns");
    nodes.push_back(nums[0]);
    values.emplace_back(nums[1], nums.size() > 2 ? nums[2] : 0.0);
  }
  Grid g;
  g.kind = kind;
  g.nodes = std::move(nodes);
  if (kind == GridKind::open_weighted && g.nodes.size() >= 2) {
    double dl = std::log(g.nodes[1] / g.nodes[0]);
    g.geometric = true;
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i)
      if (std::abs(std::log(g.nodes[i + 1] / g.nodes[i]) - dl) > 1e-9 * dl)
        g.geometric = false;
  } else if (g.nodes.size() >= 2) {
    double h = g.nodes[1] - g.nodes[0];
    g.uniform = true;
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i)
      if (std::abs((g.nodes[i + 1] - g.nodes[i]) - h) > 1e-9 * h)
        g.uniform = false;
  }
  g.validate();
  return SampledFunction(std::move(g), std::move(values));
}

json function_to_json(const SampledFunction& f) {
  json j;
  j["grid"] = grid_to_json(f.grid);
  json vals = json::array();
  for (const cplx& v : f.values) vals.push_back({v.real(), v.imag()});
  j["values"] = std::move(vals);
  return j;
}

SampledFunction function_from_json(const json& j) {
  Grid g;
  const json& jg = j.at("grid");
  g.kind = jg.at("kind").get<std::string>() == "closed_unit"
               ? GridKind::closed_unit
               : GridKind::open_weighted;
  g.nodes = jg.at("nodes").get<std::vector<double>>();
  g.uniform = jg.value("uniform", false);
  g.geometric = jg.value("geometric", false);
  std::vector<cplx> vals;
  for (const auto& v : j.at("values")) {
    if (v.is_array())
      vals.emplace_back(v.at(0).get<double>(),
                        v.size() > 1 ? v.at(1).get<double>() : 0.0);
    else
      vals.emplace_back(v.get<double>(), 0.0);
  }
  return SampledFunction(std::move(g), std::move(vals));
}

json grid_to_json(const Grid& g) {
  json j;
  j["kind"] = g.kind == GridKind::closed_unit ? "closed_unit" : "open_weighted";
  j["uniform"] = g.uniform;
  j["geometric"] = g.geometric;
  j["n"] = g.nodes.size();
  j["nodes"] = g.nodes;
  return j;
}

json report_to_json(const ConvergenceReport& rep) {
  json j;
  j["sigma"] = rep.sigma_values;
  j["value"] = rep.norms_or_defects;
  j["slope"] = rep.slope;
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.verdict == Verdict::diverged) j["exponent"] = rep.exponent;
  if (rep.extrapolated) j["extrapolated"] = *rep.extrapolated;
  if (rep.warning) j["warning"] = true;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

void write_matrix_csv(std::ostream& os, const std::vector<cplx>& entries,
                      std::size_t n, const std::string& metadata_comment) {
  if (entries.size() != n * n)
    throw std::invalid_argument("matrix csv: entry count mismatch");
  if (!metadata_comment.empty()) os << "# " << metadata_comment << "\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx& v = entries[i * n + j];
      os << v.real() << ',' << v.imag();
      if (j + 1 < n) os << ',';
    }
    os << '\n';
  }
}

std::vector<cplx> read_matrix_csv(std::istream& is, std::size_t& n_out) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (is_comment_or_header(line)) continue;
    auto nums = parse_csv_numbers(line);
    if (!nums.empty()) rows.push_back(std::move(nums));
  }
  if (rows.empty()) throw std::invalid_argument("matrix csv: no data rows");
  n_out = rows.size();
  std::vector<cplx> entries(n_out * n_out);
  for (std::size_t i = 0; i < n_out; ++i) {
    if (rows[i].size() != 2 * n_out)
      throw std::invalid_argument(
          "matrix csv: each row needs re,im pairs for every column");
    for (std::size_t j = 0; j < n_out; ++j)
      entries[i * n_out + j] = cplx(rows[i][2 * j], rows[i][2 * j + 1]);
  }
  return entries;
}

json matrix_to_json(const std::vector<cplx>& entries, std::size_t n) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      const cplx& v = entries[i * n + j];
      row.push_back({v.real(), v.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<cplx> matrix_from_json(const json& j, std::size_t& n_out) {
  const json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("matrix json: nested arrays required");
  n_out = rows.size();
  std::vector<cplx> entries(n_out * n_out);
  for (std::size_t i = 0; i < n_out; ++i) {
    const json& row = rows.at(i);
    if (row.size() != n_out)
      throw std::invalid_argument("matrix json: square matrix required");
    for (std::size_t jj = 0; jj < n_out; ++jj) {
      const json& cell = row.at(jj);
      if (cell.is_array())
        entries[i * n_out + jj] =
            cplx(cell.at(0).get<double>(),
                 cell.size() > 1 ? cell.at(1).get<double>() : 0.0);
      else
        entries[i * n_out + jj] = cplx(cell.get<double>(), 0.0);
    }
  }
  return entries;
}

}  // namespace fracint
