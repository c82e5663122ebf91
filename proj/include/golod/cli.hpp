#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace golod {

// Command-line driver.  `args` excludes the program name.  Exit codes:
// 0 = success / Golod, 1 = NotGolod (or failed witness verification),
// 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace golod
