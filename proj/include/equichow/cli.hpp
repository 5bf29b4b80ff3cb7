#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "equichow/quotient.hpp"
#include "equichow/serialize.hpp"

namespace equichow::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; on failure nothing is written to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Scenario schema:
///   {"torus_rank": 1,
///    "weights": [[1], [2], [2]],
///    "removed": [{"kept": []}, {"quotient_weights": [[2]]}],
///    "classes": ["12*t"]}
/// Throws ParseError / InvalidArgument with the offending field path.
QuotientScenario scenario_from_json(const Json& j);
QuotientScenario load_scenario(const std::string& path);

}  // namespace equichow::cli
