#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jensenlab::cli {

// Runs the jensen-lab command line. Exit codes: 0 experiment passed,
// 1 experiment failed (some residual over tolerance), 2 usage/config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jensenlab::cli
