#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adapt_meter::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,  // parse, config or usage error
  kExitIo = 2,     // file could not be read or written
};

// A diagnostic ready for stderr plus the exit code to return.
struct Failure {
  int exit_code;
  std::string message;
};

struct Terminal {
  // ANSI styling for text reports; off for pipes and ADAPT_METER_NO_COLOR.
  bool color = false;
};

// Runs one `adapt-meter` invocation. Reports go to `out`, diagnostics and
// warnings to `err`. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Terminal& terminal);

// Files named directly are taken as-is; directories contribute their `*.xml`
// files whose root element is <aspect>, sorted by file name. Throws Failure.
std::vector<std::string> expand_aspect_paths(const std::vector<std::string>& paths);

}  // namespace adapt_meter::cli
