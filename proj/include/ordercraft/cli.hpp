#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oc {

// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitInput = 3, kExitBudget = 4 };

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oc
