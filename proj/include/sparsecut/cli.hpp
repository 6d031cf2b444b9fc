#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sparsecut/error.hpp"

namespace sparsecut::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvariant = 1;
inline constexpr int kPrecondition = 2;  // also malformed input and usage errors
inline constexpr int kBudget = 3;
inline constexpr int kRejected = 4;  // certificate failed oracle verification

int exit_code_for(ErrorKind kind);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`, and "-i -" or a missing -i reads the graph from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sparsecut::cli
