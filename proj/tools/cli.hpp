#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mopw::cli {

enum ExitCode { kPass = 0, kRefuted = 1, kUsage = 2, kSingular = 3, kNumerical = 4 };

/// Runs one command line (args excludes the program name). JSON and CSV go
/// to out, diagnostics to err. MOPW_SEED in the environment overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mopw::cli
