#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vnet::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCap = 3, kAssertion = 4 };

/// Runs one `vnet` invocation. `args` excludes the program name. Reports go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vnet::cli
