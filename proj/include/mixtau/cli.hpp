#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixtau {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitNotStabilized = 3,
  kExitResource = 4,
  kExitIdentityFailed = 5,
};

/// Runs one CLI invocation. `args` excludes the program name. Single-dash
/// long options ("-vars") are accepted as synonyms of "--vars".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RGB triple for a palette index: a fixed 16-colour table, darkened on each
/// wrap-around.
struct Rgb {
  int r, g, b;
};
Rgb palette_color(std::size_t index);

}  // namespace mixtau
