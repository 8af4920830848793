#pragma once

#include <string>
#include <vector>

namespace relkit::cli {

// Outcome of one command. `code` is 0 when every requested law holds,
// 1 when some law fails, 2 on parse, schema, precondition or budget
// errors. `output` is the human text; `report` the machine report JSON
// that `--report <path>` writes.
struct RunResult {
  int code = 0;
  std::string output;
  std::string report;
};

// args excludes the program name.
RunResult run_command(const std::vector<std::string>& args);

// argv front end: runs the command, prints the output, returns the code.
int run_main(int argc, char** argv);

}  // namespace relkit::cli
