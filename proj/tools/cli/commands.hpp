#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subshift::cli {

// Exit codes: 0 success (or "zero" for iszero), 1 negative answer, 2 usage or
// input error, 3 violated computational contract.
inline constexpr int kUsageError = 2;
inline constexpr int kContractViolation = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subshift::cli
