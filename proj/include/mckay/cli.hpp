#pragma once

// Command-line front end: group info, split and folded graphs, realizability
// verdicts, the toric resolution of cyclic quotients and the acceptance suite.

#include <ostream>
#include <string>
#include <vector>

namespace mckay::cli {

constexpr int kSuccess = 0;
constexpr int kFailure = 1;  // verification failure or NotRealizable
constexpr int kUnknown = 2;
constexpr int kUsage = 64;

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay::cli
