#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fairsum/rational.hpp"

namespace fairsum {

enum class Kind { Separate, Shared };

inline const char* kind_name(Kind k) { return k == Kind::Separate ? "separate" : "shared"; }

/// One FSSP instance. Weights and the capacity are integers; a unit capacity
/// in the rational formulation corresponds to c scaled resource units here.
/// Immutable after construction.
struct Instance {
    Kind kind = Kind::Separate;
    long long capacity = 0;
    int agent_count = 2;
    // Separate: one weight list per agent. Shared: exactly one common list.
    std::vector<std::vector<long long>> items;
    std::string label;
    // Set when the total weight fits the capacity; then every criterion
    // coincides with the all-items allocation and PoF = 0.
    bool trivial = false;

    long long total_weight() const;
    long long max_weight() const;
    std::size_t item_count() const;
};

/// Validates invariants (list count per kind, 0 <= w <= c, k >= 2) and
/// computes the trivial flag. Throws std::invalid_argument on violation.
Instance make_instance(Kind kind, long long capacity, int agent_count,
                       std::vector<std::vector<long long>> items, std::string label);

/// Parses the canonical JSON instance document. Unknown fields are rejected.
Instance parse_instance(const std::string& text);

/// Emits the canonical document; parse(emit(x)) round-trips to an equal value.
std::string emit_instance(const Instance& inst);

/// max weight / capacity as an exact rational in (0, 1].
Rational alpha_of(const Instance& inst);

/// Parameters for the worst-case family generators. Every weight of the
/// underlying construction must scale to an integer under D or the generator
/// throws. eps defaults to 1/D when left zero; eps2 defaults to 1/D.
struct FamilyParams {
    long long scale = 0;        // D
    Rational eps{0, 1};
    Rational eps2{0, 1};        // second epsilon (ks-below) / eps^2 stand-in (sep-large-alpha)
    Rational alpha{0, 1};
    int r = 0;
    int h = 0;
    int k = 0;
};

/// Known ids: sep-two-solutions, sep-large-alpha, sep-r-blocks,
/// shared-large-alpha, shared-odd-blocks, k3-mm-beats-pf, ks-below, ks-above,
/// pf-tight-k.
Instance gen_family(const std::string& name, const FamilyParams& params);

std::vector<std::string> family_names();

/// Random instance with weights uniform in [1, floor(alpha_cap*c)], resampled
/// until non-trivial. Deterministic in all arguments. Separate instances get n
/// items per agent.
Instance gen_random(int n, long long c, const Rational& alpha_cap, Kind kind, int k,
                    std::uint64_t seed);

}  // namespace fairsum
