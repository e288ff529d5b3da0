#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lorentz::cli {

inline constexpr const char* kToolName = "lorentz-cli";
inline constexpr const char* kVersion = "1.0.0";

/// Runs the command line in args (without the program name). Reports go to
/// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli
