#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgturan {

/// Entry point of the command-line tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 verification failure or golden mismatch,
/// 2 invalid input or a cap violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kgturan
