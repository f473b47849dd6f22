#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opuc::tools {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opuc::tools
