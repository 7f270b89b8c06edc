#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rmlab::cli {

enum ExitCode : int { Success = 0, ClaimFailed = 1, UsageError = 2, Infeasible = 3 };

/// Entry point of rm-list-lab; args excludes the program name. Results go to out, usage
/// errors and report summaries to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmlab::cli
