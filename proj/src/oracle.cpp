#include "fairsum/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fairsum/fairness.hpp"

namespace fairsum {

namespace {

constexpr long long kStateGuard = 1LL << 24;

void check_size_guard(const Instance& inst) {
    if (inst.kind == Kind::Separate) {
        long long states = 0;
        for (const auto& list : inst.items) {
            if (list.size() > 24) throw std::length_error("oracle: size guard exceeded");
            states += 1LL << list.size();
        }
        if (states > kStateGuard) throw std::length_error("oracle: size guard exceeded");
    } else {
        long long states = 1;
        for (std::size_t i = 0; i < inst.items[0].size(); ++i) {
            states *= inst.agent_count + 1;
            if (states > kStateGuard) throw std::length_error("oracle: size guard exceeded");
        }
    }
}

// All subset sums of one list within the capacity, by direct enumeration.
std::vector<long long> subset_sums(const std::vector<long long>& list, long long cap) {
    std::set<long long> sums;
    const std::size_t n = list.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        long long s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) s += list[i];
        if (s <= cap) sums.insert(s);
    }
    return {sums.begin(), sums.end()};
}

void cross_product(const std::vector<std::vector<long long>>& per_agent, std::size_t j,
                   long long used, long long cap, std::vector<long long>& current,
                   std::set<std::vector<long long>>& out) {
    if (j == per_agent.size()) {
        out.insert(current);
        return;
    }
    for (long long s : per_agent[j]) {
        if (used + s > cap) break;  // sums are sorted ascending
        current.push_back(s);
        cross_product(per_agent, j + 1, used + s, cap, current, out);
        current.pop_back();
    }
}

// Each shared item goes to one agent or stays unassigned.
void assign_shared(const std::vector<long long>& ws, std::size_t i, long long cap,
                   std::vector<long long>& loads, long long used,
                   std::set<std::vector<long long>>& out) {
    if (i == ws.size()) {
        out.insert(loads);
        return;
    }
    assign_shared(ws, i + 1, cap, loads, used, out);
    if (used + ws[i] <= cap) {
        for (auto& load : loads) {
            load += ws[i];
            assign_shared(ws, i + 1, cap, loads, used + ws[i], out);
            load -= ws[i];
        }
    }
}

std::string describe(const Instance& inst, const std::vector<std::vector<long long>>& vecs) {
    std::ostringstream os;
    os << emit_instance(inst) << " vectors:";
    for (const auto& v : vecs) {
        os << " (";
        for (std::size_t j = 0; j < v.size(); ++j) os << (j ? "," : "") << v[j];
        os << ")";
    }
    return os.str();
}

}  // namespace

std::vector<std::vector<long long>> enumerate_all(const Instance& inst) {
    check_size_guard(inst);
    std::set<std::vector<long long>> out;
    if (inst.kind == Kind::Separate) {
        std::vector<std::vector<long long>> per_agent;
        for (const auto& list : inst.items)
            per_agent.push_back(subset_sums(list, inst.capacity));
        std::vector<long long> current;
        cross_product(per_agent, 0, 0, inst.capacity, current, out);
    } else {
        std::vector<long long> loads(static_cast<std::size_t>(inst.agent_count), 0);
        assign_shared(inst.items[0], 0, inst.capacity, loads, 0, out);
    }
    return {out.begin(), out.end()};
}

namespace {

// Descending-total scan: a dominating vector always has a strictly larger
// total, so checking against already-accepted entries suffices.
std::vector<std::vector<long long>> pareto_filter(std::vector<std::vector<long long>> vecs) {
    std::stable_sort(vecs.begin(), vecs.end(),
                     [](const auto& a, const auto& b) { return total_utility(a) > total_utility(b); });
    std::vector<std::vector<long long>> frontier;
    for (const auto& v : vecs) {
        bool dominated = false;
        for (const auto& f : frontier)
            if (dominates(f, v)) {
                dominated = true;
                break;
            }
        if (!dominated) frontier.push_back(v);
    }
    std::sort(frontier.begin(), frontier.end(), std::greater<>());
    return frontier;
}

}  // namespace

ParetoFrontier oracle_frontier(const Instance& inst) {
    ParetoFrontier frontier{inst, {}};
    for (auto& v : pareto_filter(enumerate_all(inst))) {
        FrontierEntry e;
        e.utils = std::move(v);
        frontier.entries.push_back(std::move(e));
    }
    return frontier;
}

ParetoFrontier solve_or_enumerate(const Instance& inst) {
    if (inst.agent_count == 2) return solve_frontier(inst);
    return oracle_frontier(inst);
}

OracleReport check_theorems(const Instance& inst) {
    const int k = inst.agent_count;
    auto all = enumerate_all(inst);
    OracleReport report{oracle_frontier(inst), {}, true};
    const auto& frontier = report.frontier;

    auto all_positive = [](const std::vector<long long>& v) {
        return std::all_of(v.begin(), v.end(), [](long long u) { return u > 0; });
    };
    auto satisfies_pf_against = [&](const std::vector<long long>& x,
                                    const std::vector<std::vector<long long>>& ys) {
        for (const auto& y : ys)
            if (!pf_no_improvement_over(x, y)) return false;
        return true;
    };

    // PF over the full feasible set. Candidates come from the frontier when
    // the feasible set is large: a dominated candidate fails against its
    // dominator, so nothing is lost.
    std::vector<std::vector<long long>> pf_all;
    if (all.size() <= 4000) {
        for (const auto& x : all)
            if (all_positive(x) && satisfies_pf_against(x, all)) pf_all.push_back(x);
    } else {
        for (const auto& e : frontier.entries)
            if (all_positive(e.utils) && satisfies_pf_against(e.utils, all))
                pf_all.push_back(e.utils);
    }

    auto pf_front = pf_candidates_exhaustive(frontier);

    long long zstar = 0;
    for (const auto& v : all) zstar = std::max(zstar, total_utility(v));

    auto add = [&](std::string name, bool applicable, bool passed, std::string detail) {
        if (!passed) report.all_passed = false;
        report.checks.push_back({std::move(name), applicable, passed, std::move(detail)});
    };

    add("pf_unique", true, pf_all.size() <= 1,
        pf_all.size() > 1 ? describe(inst, pf_all) : "");

    {
        bool ok = true;
        std::string detail;
        if (!pf_all.empty()) {
            __int128 best = 0;
            for (const auto& v : all) {
                __int128 p = 1;
                for (long long u : v) p *= u;
                best = std::max(best, p);
            }
            __int128 p = 1;
            for (long long u : pf_all.front()) p *= u;
            ok = p == best;
            if (!ok) detail = describe(inst, pf_all);
        }
        add("pf_maximizes_nash_product", !pf_all.empty(), ok, std::move(detail));
    }

    {
        bool applicable = k == 2 && !pf_all.empty();
        bool ok = true;
        std::string detail;
        if (applicable) {
            long long pf_total = total_utility(pf_all.front());
            for (const auto& mm : maximin(frontier))
                if (pf_total < total_utility(mm)) {
                    ok = false;
                    detail = describe(inst, {pf_all.front(), mm});
                }
        }
        add("pf_total_dominates_mm_k2", applicable, ok, std::move(detail));
    }

    {
        bool applicable = inst.kind == Kind::Shared && !pf_all.empty();
        bool ok = true;
        std::string detail;
        if (applicable) {
            const auto& x = pf_all.front();
            bool equal = std::all_of(x.begin(), x.end(), [&](long long u) { return u == x[0]; });
            ok = equal && total_utility(x) == zstar;
            if (!ok) detail = describe(inst, {x});
        }
        add("symmetric_pf_equal_and_optimal", applicable, ok, std::move(detail));
    }

    {
        bool applicable = !pf_all.empty() && zstar > 0;
        bool ok = true;
        std::string detail;
        if (applicable) {
            Rational pof(zstar - total_utility(pf_all.front()), zstar);
            ok = pof <= Rational(k - 1, k);
            if (!ok) detail = describe(inst, {pf_all.front()});
        }
        add("pf_bound_k_minus_1_over_k", applicable, ok, std::move(detail));
    }

    add("pf_frontier_equals_pf_feasible", true, pf_front == pf_all,
        pf_front != pf_all ? describe(inst, pf_front) + " vs " + describe(inst, pf_all) : "");

    return report;
}

}  // namespace fairsum
