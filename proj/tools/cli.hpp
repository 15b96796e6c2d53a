#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Artifacts go to the
/// output directory; summaries to `out`, error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqw::cli
