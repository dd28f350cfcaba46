#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colearn::cli {

enum ExitCode : int { kOk = 0, kValidationError = 1, kIoError = 2 };

// Default sweep output directory, overridable through this variable.
inline constexpr const char* kOutputDirEnv = "COLEARN_OUTPUT_DIR";

// Entry point behind the colearn binary. args excludes the program name.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err);

} // namespace colearn::cli
