#pragma once

#include <string>
#include <vector>

namespace codeg::cli {

// Full command-line surface; returns the process exit code
// (0 ok, 1 verification mismatch, 2 invalid input / IO failure).
int run(const std::vector<std::string>& args);

}  // namespace codeg::cli
