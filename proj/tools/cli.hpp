#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace starramsey::cli {

// Exit codes: 0 success, 1 when a check or verification finds a violation,
// 2 on input errors (a JSON error object is printed).
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command line (args excludes the program name) and writes a
/// single JSON document to `out`.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace starramsey::cli
