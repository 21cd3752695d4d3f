#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nsplit {

/// Dispatches one subcommand; structured documents go to `out`, human
/// summaries to `err`. Exit codes: 0 success, 1 malformed input, 2 negative
/// result (certificate, false verdict, invalid balance, exhausted budget),
/// 3 instance too large, 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsplit
