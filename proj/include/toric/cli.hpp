#pragma once

#include <string>
#include <vector>

namespace toric {

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Executes one CLI invocation. `args` excludes the program name; `input`
/// is what stdin would carry (a named input file takes precedence).
/// Exit codes: 0 success, 1 domain error, 2 parse/usage error,
/// 3 resource limit. Output is byte-stable for identical inputs and flags.
RunResult run(const std::vector<std::string>& args, const std::string& input);

} // namespace toric
