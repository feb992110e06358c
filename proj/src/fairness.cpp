#include "fairsum/fairness.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairsum {

namespace {

using i128 = __int128;

void require_nonempty(const ParetoFrontier& frontier) {
    if (frontier.entries.empty()) throw std::invalid_argument("empty frontier");
}

// Max-total representative, lexicographic descending tiebreak.
std::vector<long long> pick_representative(const std::vector<std::vector<long long>>& set) {
    auto best = set.front();
    for (const auto& u : set) {
        long long tu = total_utility(u), tb = total_utility(best);
        if (tu > tb || (tu == tb && u > best)) best = u;
    }
    return best;
}

std::vector<long long> pick_min_total(const std::vector<std::vector<long long>>& set) {
    auto worst = set.front();
    for (const auto& u : set)
        if (total_utility(u) < total_utility(worst)) worst = u;
    return worst;
}

i128 nash_product_of(const std::vector<long long>& u) {
    i128 p = 1;
    for (long long v : u) p *= v;
    return p;
}

}  // namespace

std::string int128_to_string(__int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

long long total_utility(const std::vector<long long>& u) {
    long long t = 0;
    for (long long v : u) t += v;
    return t;
}

std::pair<std::vector<long long>, long long> system_optimum(const ParetoFrontier& frontier) {
    require_nonempty(frontier);
    std::vector<long long> best = frontier.entries.front().utils;
    for (const auto& e : frontier.entries) {
        long long te = total_utility(e.utils), tb = total_utility(best);
        if (te > tb || (te == tb && e.utils > best)) best = e.utils;
    }
    return {best, total_utility(best)};
}

long long best_alone(const Instance& inst, int agent) {
    if (agent < 0 || agent >= inst.agent_count)
        throw std::invalid_argument("best_alone: invalid agent index");
    const auto& list = inst.kind == Kind::Separate ? inst.items[agent] : inst.items[0];
    return ReachSet(list, inst.capacity).max_leq(inst.capacity);
}

std::vector<std::vector<long long>> maximin(const ParetoFrontier& frontier) {
    require_nonempty(frontier);
    long long best = -1;
    std::vector<std::vector<long long>> out;
    for (const auto& e : frontier.entries) {
        long long m = *std::min_element(e.utils.begin(), e.utils.end());
        if (m > best) {
            best = m;
            out.clear();
        }
        if (m == best) out.push_back(e.utils);
    }
    return out;
}

std::vector<std::vector<long long>> kalai_smorodinski(const ParetoFrontier& frontier,
                                                      const std::vector<long long>& bests) {
    require_nonempty(frontier);
    if (std::all_of(bests.begin(), bests.end(), [](long long b) { return b == 0; }))
        throw std::domain_error("kalai_smorodinski: all bests are zero");

    auto min_ratio = [&](const std::vector<long long>& u) {
        Rational best(2);  // ratios are <= 1
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (bests[j] == 0) continue;
            best = min(best, Rational(u[j], bests[j]));
        }
        return best;
    };

    std::vector<std::vector<long long>> out;
    Rational best(-1);
    for (const auto& e : frontier.entries) {
        Rational r = min_ratio(e.utils);
        if (r > best) {
            best = r;
            out.clear();
        }
        if (r == best) out.push_back(e.utils);
    }
    return out;
}

std::vector<std::vector<long long>> nash_max(const ParetoFrontier& frontier) {
    require_nonempty(frontier);
    i128 best = -1;
    std::vector<std::vector<long long>> out;
    for (const auto& e : frontier.entries) {
        i128 p = nash_product_of(e.utils);
        if (p > best) {
            best = p;
            out.clear();
        }
        if (p == best) out.push_back(e.utils);
    }
    return out;
}

bool pf_no_improvement_over(const std::vector<long long>& x, const std::vector<long long>& y) {
    // sum_j y_j / x_j <= k, cross-multiplied by prod x_j. A vector with a
    // non-positive utility is never a valid candidate.
    for (long long v : x)
        if (v <= 0) return false;
    const std::size_t k = x.size();
    i128 prod = 1;
    for (long long v : x) prod *= v;
    i128 lhs = 0;
    for (std::size_t j = 0; j < k; ++j) lhs += static_cast<i128>(y[j]) * (prod / x[j]);
    return lhs <= static_cast<i128>(k) * prod;
}

namespace {

bool is_pf(const std::vector<long long>& x, const ParetoFrontier& frontier) {
    if (std::any_of(x.begin(), x.end(), [](long long v) { return v <= 0; })) return false;
    for (const auto& e : frontier.entries)
        if (!pf_no_improvement_over(x, e.utils)) return false;
    return true;
}

}  // namespace

std::optional<std::vector<long long>> proportional_fair(const ParetoFrontier& frontier) {
    require_nonempty(frontier);
    // The candidate must maximize the Nash product among all entries; a zero
    // maximal product means no all-positive entry exists.
    auto candidates = nash_max(frontier);
    for (const auto& x : candidates)
        if (is_pf(x, frontier)) return x;
    return std::nullopt;
}

std::vector<std::vector<long long>> pf_candidates_exhaustive(const ParetoFrontier& frontier) {
    std::vector<std::vector<long long>> out;
    for (const auto& e : frontier.entries)
        if (is_pf(e.utils, frontier)) out.push_back(e.utils);
    return out;
}

FairnessReport analyze(const Instance& inst, const ParetoFrontier& frontier) {
    FairnessReport report;
    auto [opt, zstar] = system_optimum(frontier);
    report.system_opt = opt;
    report.zstar = zstar;
    for (int j = 0; j < inst.agent_count; ++j) report.bests.push_back(best_alone(inst, j));

    auto fill = [](CriterionSet& cs, std::vector<std::vector<long long>> set) {
        cs.representative = pick_representative(set);
        cs.min_total = pick_min_total(set);
        cs.set = std::move(set);
    };
    fill(report.mm, maximin(frontier));
    fill(report.ks, kalai_smorodinski(frontier, report.bests));

    report.pf = proportional_fair(frontier);
    report.nash_set = nash_max(frontier);
    report.nash_product = int128_to_string(nash_product_of(report.nash_set.front()));
    return report;
}

}  // namespace fairsum
