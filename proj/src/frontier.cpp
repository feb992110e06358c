#include "fairsum/frontier.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairsum {

namespace {

constexpr long long kSharedCapacityLimit = 8192;

inline std::size_t word_count(long long cap) {
    return static_cast<std::size_t>(cap / 64 + 1);
}

// Mask for a row holding `m` valid bits, applied to word j.
inline std::uint64_t word_mask(long long m, std::size_t j) {
    long long lo = static_cast<long long>(j) * 64;
    if (m <= lo) return 0;
    if (m - lo >= 64) return ~0ull;
    return (1ull << (m - lo)) - 1;
}

}  // namespace

bool dominates(const std::vector<long long>& u, const std::vector<long long>& v) {
    bool strict = false;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] < v[j]) return false;
        if (u[j] > v[j]) strict = true;
    }
    return strict;
}

ReachSet::ReachSet(std::span<const long long> weights, long long capacity)
    : cap_(capacity), weights_(weights.begin(), weights.end()) {
    if (capacity < 0) throw std::invalid_argument("reachable_sums: negative capacity");
    const std::size_t words = word_count(cap_);
    bits_.assign(words, 0);
    bits_[0] = 1;
    pred_.assign(static_cast<std::size_t>(cap_) + 1, -1);

    std::vector<std::uint64_t> old(words);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const long long a = weights_[i];
        if (a <= 0 || a > cap_) continue;  // zero weights never change sums
        old = bits_;
        const std::size_t q = static_cast<std::size_t>(a / 64);
        const int r = static_cast<int>(a % 64);
        for (std::size_t j = words; j-- > q;) {
            std::uint64_t s = old[j - q] << r;
            if (r != 0 && j - q > 0) s |= old[j - q - 1] >> (64 - r);
            s &= word_mask(cap_ + 1, j);
            std::uint64_t diff = s & ~bits_[j];
            bits_[j] |= s;
            while (diff != 0) {
                int bit = std::countr_zero(diff);
                diff &= diff - 1;
                pred_[j * 64 + bit] = static_cast<int>(i);
            }
        }
    }

    best_leq_.assign(static_cast<std::size_t>(cap_) + 1, 0);
    long long best = 0;
    for (long long w = 0; w <= cap_; ++w) {
        if (contains(w)) best = w;
        best_leq_[static_cast<std::size_t>(w)] = best;
    }
}

bool ReachSet::contains(long long w) const {
    if (w < 0 || w > cap_) return false;
    return (bits_[static_cast<std::size_t>(w / 64)] >> (w % 64)) & 1;
}

long long ReachSet::max_leq(long long w) const {
    if (w < 0) return -1;
    if (w > cap_) w = cap_;
    return best_leq_[static_cast<std::size_t>(w)];
}

std::vector<long long> ReachSet::values() const {
    std::vector<long long> out;
    for (long long w = 0; w <= cap_; ++w)
        if (contains(w)) out.push_back(w);
    return out;
}

std::vector<int> ReachSet::witness(long long w) const {
    if (!contains(w)) throw std::invalid_argument("witness: sum not reachable");
    std::vector<int> picks;
    while (w > 0) {
        int i = pred_[static_cast<std::size_t>(w)];
        picks.push_back(i);
        w -= weights_[static_cast<std::size_t>(i)];
    }
    std::sort(picks.begin(), picks.end());
    return picks;
}

namespace {

void require_two_agents(const Instance& inst, Kind kind) {
    if (inst.kind != kind)
        throw std::invalid_argument("frontier: instance kind mismatch");
    if (inst.agent_count != 2)
        throw std::invalid_argument("frontier: dynamic programs require k = 2");
}

// Staircase extraction: first utility descending, emit whenever the best
// complement strictly improves. Output is sorted and deduplicated by
// construction.
template <typename MaxB, typename Witness>
std::vector<FrontierEntry> extract_staircase(long long cap, MaxB&& max_b, Witness&& witness) {
    std::vector<FrontierEntry> entries;
    long long best = -1;
    for (long long a = cap; a >= 0; --a) {
        long long b = max_b(a);
        if (b > best) {
            FrontierEntry e;
            e.utils = {a, b};
            e.witness = witness(a, b);
            entries.push_back(std::move(e));
            best = b;
        }
    }
    return entries;
}

// Row-bit table over states (w, v): weight w for agent A, v for agent B,
// w + v <= capacity. Layer-copied per item so that the update only reads
// states from before the item was considered.
class SharedTable {
public:
    SharedTable(const std::vector<long long>& weights, long long cap, bool parallel)
        : cap_(cap), words_(word_count(cap)), weights_(weights) {
        rows_.assign((static_cast<std::size_t>(cap_) + 1) * words_, 0);
        rows_[0] = 1;  // (0, 0)
        pred_.assign((static_cast<std::size_t>(cap_) + 1) * (static_cast<std::size_t>(cap_) + 1),
                     -1);

        std::vector<std::uint64_t> old(rows_.size());
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            const long long a = weights_[i];
            if (a <= 0 || a > cap_) continue;
            old = rows_;
            const std::size_t q = static_cast<std::size_t>(a / 64);
            const int r = static_cast<int>(a % 64);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
            for (long long w = 0; w <= cap_; ++w) {
                update_row(old, w, static_cast<int>(i), a, q, r);
            }
            (void)parallel;
        }
    }

    bool contains(long long w, long long v) const {
        if (w < 0 || v < 0 || w + v > cap_) return false;
        return (row(w)[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1;
    }

    // Largest v with (w, v) reachable; -1 when row w is empty.
    long long max_b(long long w) const {
        const std::uint64_t* rw = row(w);
        for (std::size_t j = words_; j-- > 0;) {
            if (rw[j] != 0)
                return static_cast<long long>(j) * 64 + (63 - std::countl_zero(rw[j]));
        }
        return -1;
    }

    Allocation witness(long long w, long long v) const {
        Allocation alloc;
        alloc.picks.resize(2);
        while (w != 0 || v != 0) {
            std::int32_t p =
                pred_[static_cast<std::size_t>(w) * (cap_ + 1) + static_cast<std::size_t>(v)];
            int item = p >> 1;
            if (p & 1) {
                alloc.picks[1].push_back(item);
                v -= weights_[static_cast<std::size_t>(item)];
            } else {
                alloc.picks[0].push_back(item);
                w -= weights_[static_cast<std::size_t>(item)];
            }
        }
        std::sort(alloc.picks[0].begin(), alloc.picks[0].end());
        std::sort(alloc.picks[1].begin(), alloc.picks[1].end());
        return alloc;
    }

private:
    const std::uint64_t* row(long long w) const {
        return &rows_[static_cast<std::size_t>(w) * words_];
    }
    std::uint64_t* row(long long w) { return &rows_[static_cast<std::size_t>(w) * words_]; }

    void update_row(const std::vector<std::uint64_t>& old, long long w, int item, long long a,
                    std::size_t q, int r) {
        const std::uint64_t* same = &old[static_cast<std::size_t>(w) * words_];
        const std::uint64_t* up =
            w >= a ? &old[static_cast<std::size_t>(w - a) * words_] : nullptr;
        std::uint64_t* dst = row(w);
        const long long valid = cap_ - w + 1;  // bits v = 0 .. cap - w
        for (std::size_t j = words_; j-- > 0;) {
            std::uint64_t nw = same[j];
            // B side: (w, v - a) -> (w, v)
            if (j >= q) {
                std::uint64_t s = same[j - q] << r;
                if (r != 0 && j - q > 0) s |= same[j - q - 1] >> (64 - r);
                nw |= s;
            }
            // A side: (w - a, v) -> (w, v)
            if (up != nullptr) nw |= up[j];
            nw &= word_mask(valid, j);
            std::uint64_t diff = nw & ~dst[j];
            dst[j] = nw;
            while (diff != 0) {
                int bit = std::countr_zero(diff);
                diff &= diff - 1;
                const long long v = static_cast<long long>(j) * 64 + bit;
                const bool from_a =
                    up != nullptr && ((up[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1);
                pred_[static_cast<std::size_t>(w) * (cap_ + 1) + static_cast<std::size_t>(v)] =
                    static_cast<std::int32_t>(item) * 2 + (from_a ? 0 : 1);
            }
        }
    }

    long long cap_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::int32_t> pred_;
    const std::vector<long long>& weights_;
};

}  // namespace

ParetoFrontier pareto_separate(const Instance& inst) {
    require_two_agents(inst, Kind::Separate);
    ReachSet ra(inst.items[0], inst.capacity);
    ReachSet rb(inst.items[1], inst.capacity);

    ParetoFrontier frontier{inst, {}};
    long long best = -1;
    for (long long a = inst.capacity; a >= 0; --a) {
        if (!ra.contains(a)) continue;
        long long b = rb.max_leq(inst.capacity - a);
        if (b > best) {
            FrontierEntry e;
            e.utils = {a, b};
            e.witness.picks = {ra.witness(a), rb.witness(b)};
            frontier.entries.push_back(std::move(e));
            best = b;
        }
    }
    return frontier;
}

ParetoFrontier pareto_shared(const Instance& inst, Exec exec) {
    require_two_agents(inst, Kind::Shared);
    if (inst.capacity > kSharedCapacityLimit)
        throw std::invalid_argument("pareto_shared: capacity exceeds supported limit of " +
                                    std::to_string(kSharedCapacityLimit));
    SharedTable table(inst.items[0], inst.capacity, exec == Exec::Parallel);
    ParetoFrontier frontier{inst, {}};
    frontier.entries = extract_staircase(
        inst.capacity, [&](long long a) { return table.max_b(a); },
        [&](long long a, long long b) { return table.witness(a, b); });
    return frontier;
}

ParetoFrontier pareto_shared_reference(const Instance& inst) {
    require_two_agents(inst, Kind::Shared);
    const long long c = inst.capacity;
    if (c > kSharedCapacityLimit)
        throw std::invalid_argument("pareto_shared_reference: capacity exceeds supported limit");
    const auto& ws = inst.items[0];
    const std::size_t stride = static_cast<std::size_t>(c) + 1;

    std::vector<char> d(stride * stride, 0);
    std::vector<std::int32_t> pred(stride * stride, -1);
    d[0] = 1;
    std::vector<char> old;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const long long a = ws[i];
        if (a <= 0 || a > c) continue;
        old = d;
        for (long long w = 0; w <= c; ++w) {
            for (long long v = 0; w + v <= c; ++v) {
                if (d[w * stride + v]) continue;
                if (w >= a && old[(w - a) * stride + v]) {
                    d[w * stride + v] = 1;
                    pred[w * stride + v] = static_cast<std::int32_t>(i) * 2;
                } else if (v >= a && old[w * stride + (v - a)]) {
                    d[w * stride + v] = 1;
                    pred[w * stride + v] = static_cast<std::int32_t>(i) * 2 + 1;
                }
            }
        }
    }

    auto max_b = [&](long long w) -> long long {
        for (long long v = c - w; v >= 0; --v)
            if (d[w * stride + v]) return v;
        return -1;
    };
    auto witness = [&](long long w, long long v) {
        Allocation alloc;
        alloc.picks.resize(2);
        while (w != 0 || v != 0) {
            std::int32_t p = pred[w * stride + v];
            int item = p >> 1;
            if (p & 1) {
                alloc.picks[1].push_back(item);
                v -= ws[static_cast<std::size_t>(item)];
            } else {
                alloc.picks[0].push_back(item);
                w -= ws[static_cast<std::size_t>(item)];
            }
        }
        std::sort(alloc.picks[0].begin(), alloc.picks[0].end());
        std::sort(alloc.picks[1].begin(), alloc.picks[1].end());
        return alloc;
    };

    ParetoFrontier frontier{inst, {}};
    frontier.entries = extract_staircase(c, max_b, witness);
    return frontier;
}

ParetoFrontier solve_frontier(const Instance& inst, Exec exec) {
    return inst.kind == Kind::Separate ? pareto_separate(inst) : pareto_shared(inst, exec);
}

bool witness_ok(const Instance& inst, const FrontierEntry& entry) {
    if (entry.witness.picks.size() != static_cast<std::size_t>(inst.agent_count)) return false;
    long long total = 0;
    std::vector<char> used;
    if (inst.kind == Kind::Shared) used.assign(inst.items[0].size(), 0);
    for (int j = 0; j < inst.agent_count; ++j) {
        const auto& list = inst.kind == Kind::Separate ? inst.items[j] : inst.items[0];
        long long sum = 0;
        for (int idx : entry.witness.picks[j]) {
            if (idx < 0 || static_cast<std::size_t>(idx) >= list.size()) return false;
            if (inst.kind == Kind::Shared) {
                if (used[static_cast<std::size_t>(idx)]) return false;  // disjointness
                used[static_cast<std::size_t>(idx)] = 1;
            }
            sum += list[idx];
        }
        if (sum != entry.utils[static_cast<std::size_t>(j)]) return false;
        total += sum;
    }
    return total <= inst.capacity;
}

const Allocation& reconstruct(const ParetoFrontier& frontier, std::size_t entry_index) {
    if (entry_index >= frontier.entries.size())
        throw std::invalid_argument("reconstruct: entry index out of range");
    const FrontierEntry& e = frontier.entries[entry_index];
    if (!witness_ok(frontier.instance, e))
        throw std::logic_error("reconstruct: witness does not reproduce the entry");
    return e.witness;
}

}  // namespace fairsum
