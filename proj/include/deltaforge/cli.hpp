#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltaforge {

// exit statuses shared by every command
enum ExitCode : int {
  ExitOk = 0,
  ExitFail = 1,   // the verdict is negative: identity fails, implication refuted, base fails, suite has fails
  ExitInput = 2,  // unreadable file, bad arguments, unknown name, invalid presentation
};

// runs one command line (args[0] is the program name); JSON goes to out, diagnostics to err
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltaforge
