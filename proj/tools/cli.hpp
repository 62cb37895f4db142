#pragma once

#include <string>
#include <vector>

namespace rootpoly::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailure = 2,
  kResourceRefused = 3,
};

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures its output.
Result run(const std::vector<std::string>& args);

}  // namespace rootpoly::cli
