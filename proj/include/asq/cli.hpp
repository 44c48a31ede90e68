#pragma once

#include <string>
#include <vector>

namespace asq {

// Runs one CLI invocation (args exclude the program name).
// Exit status: 0 success, 1 numerical failure, 2 argument error.
int cli_run(const std::vector<std::string>& args);

}  // namespace asq
