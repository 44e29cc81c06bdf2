#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace xbound::cli {

/// Entry point shared by main() and the tests. `args` excludes the program
/// name. Exit codes: 0 success / constraints satisfied, 1 constraint
/// violation or verification mismatch, 2 usage or parse error, 3 numerical
/// non-convergence.
int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

}  // namespace xbound::cli
