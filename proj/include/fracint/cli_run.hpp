#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace fracint {

// Exit codes: 0 success, 2 validation error, 3 verdict diverged/inconclusive
// where the verb demands convergence, 4 internal numerical failure.
enum ExitCode {
  kExitOk = 0,
  kExitValidation = 2,
  kExitVerdict = 3,
  kExitNumerical = 4,
};

// Executes one verb described by a fully-merged config (file values
// overridden by flags).  Every parameter the run resolves, including
// defaults, is echoed back into the config object, which is embedded in all
// artifacts so a run can be replayed from its own output.
int run_config(nlohmann::json& config, std::ostream& out, std::ostream& err);

// Convenience wrapper: parse JSON text, run, write artifacts to the path in
// config["out"] (or `out` when absent/"-").
int run_config_text(const std::string& config_text, std::ostream& out,
                    std::ostream& err);

extern const char* const kVerbList[];
extern const std::size_t kVerbCount;

}  // namespace fracint
