#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssq::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one `ssq` invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics (prefixed "error:") to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssq::cli
