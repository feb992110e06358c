#pragma once

#include <string>
#include <vector>

#include "fairsum/frontier.hpp"
#include "fairsum/instance.hpp"

namespace fairsum {

struct TheoremCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    std::string detail;  // counterexample payload when failed
};

struct OracleReport {
    ParetoFrontier frontier;
    std::vector<TheoremCheck> checks;
    bool all_passed = true;
};

/// Every feasible utility vector of the instance, by exhaustive assignment
/// enumeration, collapsed to distinct vectors. Size guard: separate
/// sum_j 2^n_j <= 2^24, shared (k+1)^n <= 2^24; throws std::length_error
/// beyond it. Works for any k >= 2.
std::vector<std::vector<long long>> enumerate_all(const Instance& inst);

/// Pareto filter over enumerate_all; ground truth for the DP frontiers.
/// Entries are sorted descending lexicographically and carry no witnesses.
ParetoFrontier oracle_frontier(const Instance& inst);

/// DP frontier for k = 2, oracle frontier otherwise.
ParetoFrontier solve_or_enumerate(const Instance& inst);

/// Evaluates the general fair-solution theorems on the full feasible set:
/// PF uniqueness, PF maximizes the Nash product, the k = 2 total-utility
/// dominance of PF over MM, the symmetric/shared equal-utility and
/// system-optimality consequences, the (k-1)/k PF bound, and agreement of
/// PF-over-frontier with PF-over-all-feasible.
OracleReport check_theorems(const Instance& inst);

}  // namespace fairsum
