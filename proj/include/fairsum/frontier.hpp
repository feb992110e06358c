#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fairsum/instance.hpp"

namespace fairsum {

/// One item-index set per agent. Separate kind: set j indexes agent j's own
/// list. Shared kind: pairwise disjoint subsets of the common list.
struct Allocation {
    std::vector<std::vector<int>> picks;
};

struct FrontierEntry {
    std::vector<long long> utils;
    Allocation witness;
};

/// Mutually non-dominated utility vectors with witnesses, sorted by
/// descending first utility (the order the DP emits them in).
struct ParetoFrontier {
    Instance instance;
    std::vector<FrontierEntry> entries;
};

/// Strict Pareto dominance: u >= v componentwise with at least one strict.
bool dominates(const std::vector<long long>& u, const std::vector<long long>& v);

/// Subset sums of `weights` reachable within capacity, with per-sum
/// predecessor records for witness reconstruction. O(n c) bit-parallel.
class ReachSet {
public:
    ReachSet(std::span<const long long> weights, long long capacity);

    long long capacity() const { return cap_; }
    bool contains(long long w) const;
    /// Largest reachable sum <= w (0 is always reachable).
    long long max_leq(long long w) const;
    std::vector<long long> values() const;
    /// Item indices of one subset summing to w; w must be reachable.
    std::vector<int> witness(long long w) const;

private:
    long long cap_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> pred_;          // item that first reached each sum, -1 for 0
    std::vector<long long> best_leq_;
    std::vector<long long> weights_;
};

inline ReachSet reachable_sums(std::span<const long long> weights, long long capacity) {
    return ReachSet(weights, capacity);
}

/// Frontier DP for the separate-items scenario, k = 2. O(n c).
ParetoFrontier pareto_separate(const Instance& inst);

enum class Exec { Serial, Parallel };

/// Frontier DP for the shared-items scenario, k = 2. O(n c^2) via a
/// row-parallel bit-table; the update reads the previous item layer only, so
/// an item can never serve both agents in one sweep.
ParetoFrontier pareto_shared(const Instance& inst, Exec exec = Exec::Parallel);

/// Plain boolean-table implementation of pareto_shared, kept as the reference
/// the kernel is tested against.
ParetoFrontier pareto_shared_reference(const Instance& inst);

/// Dispatches on instance kind (k = 2 only).
ParetoFrontier solve_frontier(const Instance& inst, Exec exec = Exec::Parallel);

/// Witness of the given frontier entry, validated against the instance: the
/// allocation must be feasible and reproduce the entry's utilities exactly.
const Allocation& reconstruct(const ParetoFrontier& frontier, std::size_t entry_index);

/// True when the entry's witness is feasible for `inst` and re-sums to the
/// entry's utility vector.
bool witness_ok(const Instance& inst, const FrontierEntry& entry);

}  // namespace fairsum
