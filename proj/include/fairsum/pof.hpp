#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fairsum/fairness.hpp"
#include "fairsum/instance.hpp"
#include "fairsum/rational.hpp"

namespace fairsum {

enum class Criterion { MM, KS, PF };

const char* criterion_name(Criterion c);

struct Bounds {
    Rational lower;
    Rational upper;
};

struct Interval {
    Rational lower;
    Rational upper;
};

/// Per-instance Price of Fairness with the matching bound curve attached.
struct PofRecord {
    std::string label;
    Kind kind = Kind::Separate;
    Criterion criterion = Criterion::MM;
    Rational alpha;
    long long zstar = 0;
    long long zfair = 0;
    bool pf_exists = true;   // false only for an absent PF criterion
    Rational pof;
    Bounds bounds;
    bool within = false;     // pof <= bounds.upper, exact
};

// Closed-form curves in alpha, two agents. Piece conventions:
// separate [2/3,1], [1/2,2/3), (0,1/2); shared (2/3,1], (1/3,2/3], (0,1/3].
Bounds bound_mm_separate(const Rational& alpha);
Bounds bound_ks_separate(const Rational& alpha);
Bounds bound_pf_separate(const Rational& alpha);
Bounds bound_mm_shared(const Rational& alpha);
/// PF in the shared (symmetric) case is system optimal whenever it exists.
Bounds bound_pf_shared(const Rational& alpha);

/// (k-1)/k, any number of agents.
Rational bound_pf_general(int k);

/// Matching curve for a scenario, criterion and agent count. For k > 2 the
/// two-agent curves do not apply: MM/KS fall back to the packing bound
/// upper = alpha, PF to (k-1)/k.
Bounds bound_for(Kind kind, Criterion crit, const Rational& alpha, int agent_count = 2);

/// PF bound of Bertsimas et al. for unequal maximum utilities:
/// (k-1)/k + F - G with an exact rational enclosure of the sqrt(k) factor.
Interval bertsimas_bound(const std::vector<long long>& bests, int k);

/// upper/lower curve ratio in the regimes where the bounds differ
/// (alpha < 1/2 separate, alpha <= 1/3 shared).
Rational gap_ratio(const Rational& alpha, Kind kind);

PofRecord pof_of(const Instance& inst, const FairnessReport& report, Criterion crit);

/// Solves the instance (DP for k = 2, exhaustive enumeration otherwise) and
/// returns MM, KS and, when present, PF records.
std::vector<PofRecord> records_for(const Instance& inst);

/// Worst-case family sweep. The grid axis depends on the family: alpha for
/// *-large-alpha, r / h / k for the block families (passed via int_grid);
/// eps_schedule applies to every grid point. Scale D is the smallest one
/// making all weights integral.
std::vector<PofRecord> sweep_family(const std::string& family,
                                    const std::vector<Rational>& alpha_grid,
                                    const std::vector<Rational>& eps_schedule,
                                    const std::vector<int>& int_grid);

/// Random batch sweep; deterministic in the seed, order-independent assembly.
std::vector<PofRecord> sweep_random(int count, int n, long long c, const Rational& alpha_cap,
                                    Kind kind, std::uint64_t seed);

/// CSV schema: label,scenario,criterion,alpha_num,alpha_den,zstar,zfair,
/// pof_num,pof_den,lb_num,lb_den,ub_num,ub_den,within. Header row mandatory.
void write_records_csv(std::ostream& os, const std::vector<PofRecord>& records);

}  // namespace fairsum
