#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burnside {

// Full command driver. args excludes the program name. Reports go to out
// (or the --out file), diagnostics to err. Exit code contract: 0 pass or
// informational, 1 usage or construction error, 2 proven statement failed,
// 3 conjecture counterexample.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace burnside
