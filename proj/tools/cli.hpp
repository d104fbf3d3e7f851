#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quivexp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitBudget = 3;

// Runs one command line (without the program name). Results go to `out` as a
// JSON envelope (or CSV for `curve --format csv`); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quivexp::cli
