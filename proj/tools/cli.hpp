#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace scf::cli {

/// Runs one CLI invocation. Exit status: 0 success / all checks passed,
/// 1 validation or property failure, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scf::cli
