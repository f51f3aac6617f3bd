#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace d2p::cli {

/// Exit codes: 0 success / verdict separating, 2 counterexample found,
/// 3 exhaustive budget refused, 4 input error, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace d2p::cli
