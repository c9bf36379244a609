#pragma once

// Command-line surface. Exit codes: 0 success, 1 input or validation error,
// 2 identity or golden-table failure, 3 the compared subcomplexes differ.

#include <ostream>

namespace filtcx::cli {

enum ExitCode : int { ok = 0, input_error = 1, identity_failure = 2, differs = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace filtcx::cli
