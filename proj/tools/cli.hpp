#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace skewfq::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // verify found a violation
  kParse = 2,
  kMath = 3,
  kCap = 4,
  kInternal = 5,
};

struct Command {
  std::string name;
  std::optional<std::string> ring;
  std::vector<std::string> args;
  bool json = false;
  std::uint64_t seed;
  std::size_t alternates = 1;
  std::size_t cap;
  std::optional<std::string> at;
  std::optional<std::string> suite;
};

/// Executes one parsed command. Results go to `out`; on failure a one-line
/// JSON error object goes to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and runs the command.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace skewfq::cli
