#pragma once

// Command-line front end. Every subcommand wraps one library operation and
// prints exact JSON (default) or tab-separated values.

#include <iosfwd>
#include <string>
#include <vector>

namespace rmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSearchCap = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rmt::cli
