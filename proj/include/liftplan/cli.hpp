#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liftplan::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kSolverError = 3,
  kVerificationFailed = 4,
};

// Base directory for relative or defaulted output paths.
inline constexpr const char* kOutputDirEnv = "LIFTPLAN_OUTPUT_DIR";

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liftplan::cli
