#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fracint/convergence.hpp"
#include "fracint/sampled_function.hpp"

#include <nlohmann/json_fwd.hpp>

namespace fracint {

// SampledFunction <-> CSV with columns node,re,im (header line included).
void write_function_csv(std::ostream& os, const SampledFunction& f,
                        const std::string& metadata_comment = "");
SampledFunction read_function_csv(std::istream& is, GridKind kind);

nlohmann::json function_to_json(const SampledFunction& f);
SampledFunction function_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConvergenceReport& rep);

// Complex matrices, row-major.  CSV rows carry re,im pairs per entry
// (2n numbers per row); JSON is nested arrays of [re, im] pairs.
void write_matrix_csv(std::ostream& os, const std::vector<cplx>& entries,
                      std::size_t n, const std::string& metadata_comment = "");
std::vector<cplx> read_matrix_csv(std::istream& is, std::size_t& n_out);

nlohmann::json matrix_to_json(const std::vector<cplx>& entries, std::size_t n);
std::vector<cplx> matrix_from_json(const nlohmann::json& j, std::size_t& n_out);

nlohmann::json grid_to_json(const Grid& g);

}  // namespace fracint
