#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinc::cli {

/// Process exit codes.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceCap = 3 };

/// Largest ambient dimension p + q accepted by any command.
constexpr int kMaxAmbientDim = 16;

/// Runs one invocation. args[0] is the program name. Data goes to `out`
/// (or to --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinc::cli
