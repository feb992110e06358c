#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairsum/frontier.hpp"
#include "fairsum/rational.hpp"

namespace fairsum {

/// All frontier entries attaining a criterion optimum, plus the designated
/// representative (max total utility, ties broken lexicographically
/// descending) and the min-total entry for diagnostics.
struct CriterionSet {
    std::vector<std::vector<long long>> set;
    std::vector<long long> representative;
    std::vector<long long> min_total;
};

struct FairnessReport {
    std::vector<long long> system_opt;
    long long zstar = 0;
    std::vector<long long> bests;        // per-agent standalone optimum
    CriterionSet mm;
    CriterionSet ks;
    std::optional<std::vector<long long>> pf;
    std::vector<std::vector<long long>> nash_set;
    std::string nash_product;            // decimal string of the maximal product
};

long long total_utility(const std::vector<long long>& u);

/// Entry maximizing total utility; ties broken lexicographically descending.
std::pair<std::vector<long long>, long long> system_optimum(const ParetoFrontier& frontier);

/// Single-agent subset-sum optimum of agent j's accessible items.
long long best_alone(const Instance& inst, int agent);

std::vector<std::vector<long long>> maximin(const ParetoFrontier& frontier);

/// Exact rational comparison of min_j u_j / bests_j. An agent with bests_j = 0
/// can never be shortchanged and is dropped from the min.
std::vector<std::vector<long long>> kalai_smorodinski(const ParetoFrontier& frontier,
                                                      const std::vector<long long>& bests);

std::vector<std::vector<long long>> nash_max(const ParetoFrontier& frontier);

/// Whether sum_j u_j(y) / u_j(x) <= k for the all-positive vector x.
bool pf_no_improvement_over(const std::vector<long long>& x, const std::vector<long long>& y);

/// The proportional fair solution, or absent. Only the Nash maximizer needs
/// testing: any PF solution maximizes the Nash product, and checking frontier
/// entries suffices because the defining sum is monotone in each u_j(y).
std::optional<std::vector<long long>> proportional_fair(const ParetoFrontier& frontier);

/// Every frontier entry satisfying the PF condition; used to verify the
/// uniqueness property (cardinality <= 1).
std::vector<std::vector<long long>> pf_candidates_exhaustive(const ParetoFrontier& frontier);

FairnessReport analyze(const Instance& inst, const ParetoFrontier& frontier);

std::string int128_to_string(__int128 v);

}  // namespace fairsum
