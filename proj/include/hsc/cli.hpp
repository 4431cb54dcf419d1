#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsc::cli {

enum class Format { Json, Csv, Text };

struct CommandConfig {
  std::string command;
  std::optional<long> n, a, b, r;
  Format format = Format::Text;
  std::optional<std::string> output;
  std::size_t max_slice_dim = 5000;
};

// Bad flags, missing or out-of-range parameters, guard violations. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help was given; the message is the help text. Exit code 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// argv excludes the program name. Throws UsageError.
CommandConfig parse_config(const std::vector<std::string>& argv);

struct RunResult {
  int exit_code = kExitPass;
  std::string report;
};

// Validates parameters and guards (UsageError), then runs the command.
RunResult run(const CommandConfig& cfg);

// Output path after applying HSC_OUTPUT_DIR to relative paths.
std::string resolve_output_path(const std::string& path);

// Full front end: parse, run, write the report to `out` or the output file,
// diagnostics to `err`. Returns the process exit code.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hsc::cli
