#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairsum::cli {

/// Runs one CLI invocation (verbs: solve, sweep, gen, check).
/// Exit codes: 0 success, 1 solver/oracle failure or theorem violation,
/// 2 usage error. Deterministic output for fixed arguments and seeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fairsum::cli
