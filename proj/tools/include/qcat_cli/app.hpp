#pragma once

#include <iosfwd>
#include <vector>
#include <string>

namespace qcat::cli {

/// Exit codes of the qcat tool.
enum Exit : int {
  kOk = 0,
  kSuiteFailed = 1,
  kUsage = 2,  ///< bad flags, unknown suite or object
  kParse = 3,
  kRequirement = 4,  ///< backend lacks the structure a command needs
  kContract = 5,     ///< any other library error
};

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli
