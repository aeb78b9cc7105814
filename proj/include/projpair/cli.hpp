#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "projpair/core.hpp"

namespace projpair::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNoSwap = 4;
inline constexpr int kExitPrecondition = 5;

int exit_code_for(ErrorCode code);

/// Runs one `projpair` invocation. `args` excludes the program name. The
/// JSON report goes to `out`; matrices go only to the files named by --out.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace projpair::cli
