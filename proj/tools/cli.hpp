#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relalg::cli {

// Exit codes shared by every command.
inline constexpr int kExitYes = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNo = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relalg::cli
