#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hgraph::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2, kHypothesis = 3 };

/// Runs one command line (without the program name).  Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgraph::cli
