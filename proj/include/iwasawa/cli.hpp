#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iwasawa::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMathFailure = 1,
  kInputError = 2,
  kPrecisionAmbiguous = 3,
};

struct Options {
  std::optional<int> precision;  // overrides ctx.N
  std::optional<int> tdegree;    // overrides every T-truncation degree
  std::optional<std::uint64_t> seed;
};

struct Result {
  int exit_code = kSuccess;
  std::string report;  // JSON text, always present
};

struct CommandInfo {
  std::string name;
  std::vector<std::string> operations;  // library operations it reaches
};

const std::vector<CommandInfo>& commands();

/// Runs one command on JSON input text. Never throws for bad input: errors
/// become a JSON error report with the matching exit code.
Result run(const std::string& command, const std::string& input, const Options& options,
           const std::string& source = "input");

}  // namespace iwasawa::cli
