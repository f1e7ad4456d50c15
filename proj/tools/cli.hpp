#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

/// Exit codes: 0 affirmative, 1 well-formed negative verdict, 2 input or usage
/// error, 3 internal failure.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternal = 3;

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
