#include "fairsum/pof.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "fairsum/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fairsum {

namespace {

void check_alpha(const Rational& alpha) {
    if (!(Rational(0) < alpha && alpha <= Rational(1)))
        throw std::invalid_argument("alpha must be in (0, 1]");
}

long long ceil_inverse(const Rational& alpha) {
    // ceil(1/alpha) for alpha = p/q
    return (alpha.den() + alpha.num() - 1) / alpha.num();
}

long long ceil_half_inverse(const Rational& alpha) {
    // ceil(1/(2 alpha))
    return (alpha.den() + 2 * alpha.num() - 1) / (2 * alpha.num());
}

Bounds separate_mm_ks(const Rational& alpha) {
    check_alpha(alpha);
    if (alpha >= Rational(2, 3)) {
        Rational u = Rational(2) - Rational(1) / alpha;
        return {u, u};
    }
    if (alpha >= Rational(1, 2)) return {Rational(1, 2), Rational(1, 2)};
    return {Rational(1, ceil_inverse(alpha)), alpha};
}

}  // namespace

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::MM: return "mm";
        case Criterion::KS: return "ks";
        case Criterion::PF: return "pf";
    }
    return "?";
}

Bounds bound_mm_separate(const Rational& alpha) { return separate_mm_ks(alpha); }
Bounds bound_ks_separate(const Rational& alpha) { return separate_mm_ks(alpha); }

Bounds bound_pf_separate(const Rational& alpha) {
    check_alpha(alpha);
    if (alpha >= Rational(1, 2)) return {Rational(1, 2), Rational(1, 2)};
    return {Rational(1, ceil_inverse(alpha)), alpha};
}

Bounds bound_mm_shared(const Rational& alpha) {
    check_alpha(alpha);
    if (alpha > Rational(2, 3)) {
        Rational u = Rational(2) * alpha - Rational(1);
        return {u, u};
    }
    if (alpha > Rational(1, 3)) return {Rational(1, 3), Rational(1, 3)};
    return {Rational(1, 2 * ceil_half_inverse(alpha) + 1), alpha};
}

Bounds bound_pf_shared(const Rational& alpha) {
    check_alpha(alpha);
    return {Rational(0), Rational(0)};
}

Rational bound_pf_general(int k) {
    if (k < 2) throw std::invalid_argument("bound_pf_general: k must be >= 2");
    return Rational(k - 1, k);
}

Bounds bound_for(Kind kind, Criterion crit, const Rational& alpha, int agent_count) {
    if (agent_count > 2) {
        if (crit == Criterion::PF) return {Rational(0), bound_pf_general(agent_count)};
        return {Rational(0), alpha};  // packing lemma, any k
    }
    if (kind == Kind::Separate) {
        switch (crit) {
            case Criterion::MM: return bound_mm_separate(alpha);
            case Criterion::KS: return bound_ks_separate(alpha);
            case Criterion::PF: return bound_pf_separate(alpha);
        }
    }
    switch (crit) {
        case Criterion::MM:
        case Criterion::KS: return bound_mm_shared(alpha);
        case Criterion::PF: return bound_pf_shared(alpha);
    }
    return {};
}

Interval bertsimas_bound(const std::vector<long long>& bests, int k) {
    if (k < 2 || bests.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("bertsimas_bound: need one best per agent");
    long long bmin = *std::min_element(bests.begin(), bests.end());
    long long bmax = *std::max_element(bests.begin(), bests.end());
    long long bsum = std::accumulate(bests.begin(), bests.end(), 0LL);
    if (bmax == 0) throw std::domain_error("bertsimas_bound: all bests are zero");

    // sqrt(k) enclosed by r/Q <= sqrt(k) < (r+1)/Q with r = floor(sqrt(k Q^2)).
    constexpr long long Q = 1'000'000;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(k)) * Q);
    while (static_cast<__int128>(r) * r > static_cast<__int128>(k) * Q * Q) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= static_cast<__int128>(k) * Q * Q) ++r;
    Rational sqrt_lo(r, Q), sqrt_hi(r + 1, Q);

    Rational base = Rational(k - 1, k) + Rational(bmin, bsum);
    Rational ratio(bmin, bmax);
    auto g = [&](const Rational& s) {
        return (Rational(2) * s - Rational(1)) / Rational(k) * ratio;
    };
    // G enters negatively: the expression's upper end uses the sqrt lower end.
    return {base - g(sqrt_hi), base - g(sqrt_lo)};
}

Rational gap_ratio(const Rational& alpha, Kind kind) {
    check_alpha(alpha);
    if (kind == Kind::Separate) {
        if (!(alpha < Rational(1, 2)))
            throw std::invalid_argument("gap_ratio: separate regime requires alpha < 1/2");
        return alpha * Rational(ceil_inverse(alpha));
    }
    if (!(alpha <= Rational(1, 3)))
        throw std::invalid_argument("gap_ratio: shared regime requires alpha <= 1/3");
    return alpha * Rational(2 * ceil_half_inverse(alpha) + 1);
}

PofRecord pof_of(const Instance& inst, const FairnessReport& report, Criterion crit) {
    if (report.zstar <= 0) throw std::domain_error("pof_of: system optimum value must be positive");
    PofRecord rec;
    rec.label = inst.label;
    rec.kind = inst.kind;
    rec.criterion = crit;
    rec.alpha = alpha_of(inst);
    rec.zstar = report.zstar;
    switch (crit) {
        case Criterion::MM: rec.zfair = total_utility(report.mm.representative); break;
        case Criterion::KS: rec.zfair = total_utility(report.ks.representative); break;
        case Criterion::PF:
            if (!report.pf.has_value()) {
                rec.pf_exists = false;
                rec.zfair = 0;
            } else {
                rec.zfair = total_utility(*report.pf);
            }
            break;
    }
    rec.bounds = bound_for(inst.kind, crit, rec.alpha, inst.agent_count);
    if (crit == Criterion::PF && !rec.pf_exists) {
        rec.pof = Rational(0);
        rec.within = true;  // vacuous
        return rec;
    }
    rec.pof = Rational(rec.zstar - rec.zfair, rec.zstar);
    rec.within = rec.pof <= rec.bounds.upper;
    return rec;
}

std::vector<PofRecord> records_for(const Instance& inst) {
    auto frontier = solve_or_enumerate(inst);
    auto report = analyze(inst, frontier);
    std::vector<PofRecord> records;
    records.push_back(pof_of(inst, report, Criterion::MM));
    records.push_back(pof_of(inst, report, Criterion::KS));
    if (report.pf.has_value()) records.push_back(pof_of(inst, report, Criterion::PF));
    return records;
}

namespace {

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Smallest scale making every construction weight integral.
long long family_scale(const std::string& family, const Rational& alpha, const Rational& eps,
                       int int_param) {
    long long d = eps.den();
    if (family == "sep-large-alpha")
        d = lcm_ll(lcm_ll(d, alpha.den()), (eps * (Rational(1) - alpha) / Rational(2)).den());
    else if (family == "shared-large-alpha")
        d = lcm_ll(d, alpha.den());
    else if (family == "sep-r-blocks")
        d = lcm_ll(d, int_param);
    else if (family == "shared-odd-blocks")
        d = lcm_ll(d, 2LL * int_param + 1);
    else if (family == "pf-tight-k")
        d = lcm_ll(d, int_param);
    else if (family == "k3-mm-beats-pf")
        d = lcm_ll(d, 20);
    else if (family == "ks-below")
        d = lcm_ll(lcm_ll(d, 4), 2 * eps.den());  // eps' = eps/2
    else if (family == "ks-above")
        d = lcm_ll(d, 4);
    return d;
}

std::vector<PofRecord> solve_point(const std::string& family, const Rational& alpha,
                                   const Rational& eps, int int_param) {
    FamilyParams p;
    p.alpha = alpha;
    p.scale = family_scale(family, alpha, eps, int_param);
    // The odd-blocks construction needs its epsilon items at the smallest
    // scaled unit to stay within 1/D of the limit; the schedule value sets
    // the granularity there.
    p.eps = family == "shared-odd-blocks" ? Rational(1, p.scale) : eps;
    // The second epsilon of this construction must vanish faster than eps or
    // the Kalai-Smorodinski solution degenerates to the system optimum.
    if (family == "sep-large-alpha") p.eps2 = eps * (Rational(1) - alpha) / Rational(2);
    if (family == "sep-r-blocks") p.r = int_param;
    if (family == "shared-odd-blocks") p.h = int_param;
    if (family == "pf-tight-k") p.k = int_param;
    return records_for(gen_family(family, p));
}

void sort_records(std::vector<PofRecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const PofRecord& a, const PofRecord& b) {
        if (a.label != b.label) return a.label < b.label;
        return static_cast<int>(a.criterion) < static_cast<int>(b.criterion);
    });
}

}  // namespace

std::vector<PofRecord> sweep_family(const std::string& family,
                                    const std::vector<Rational>& alpha_grid,
                                    const std::vector<Rational>& eps_schedule,
                                    const std::vector<int>& int_grid) {
    if (eps_schedule.empty()) throw std::invalid_argument("sweep: empty eps schedule");
    const bool uses_alpha = family == "sep-large-alpha" || family == "shared-large-alpha";
    const bool uses_int = family == "sep-r-blocks" || family == "shared-odd-blocks" ||
                          family == "pf-tight-k";
    if (uses_alpha && alpha_grid.empty()) throw std::invalid_argument("sweep: empty alpha grid");
    if (uses_int && int_grid.empty()) throw std::invalid_argument("sweep: empty parameter grid");

    std::vector<std::pair<Rational, int>> points;
    if (uses_alpha)
        for (const auto& a : alpha_grid) points.emplace_back(a, 0);
    else if (uses_int)
        for (int v : int_grid) points.emplace_back(Rational(0), v);
    else
        points.emplace_back(Rational(0), 0);

    std::vector<std::vector<PofRecord>> chunks(points.size() * eps_schedule.size());
    std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t idx = 0; idx < chunks.size(); ++idx) {
        // Exceptions must not escape the parallel region.
        try {
            const auto& [alpha, iv] = points[idx / eps_schedule.size()];
            const auto& eps = eps_schedule[idx % eps_schedule.size()];
            chunks[idx] = solve_point(family, alpha, eps, iv);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<PofRecord> records;
    for (auto& chunk : chunks)
        records.insert(records.end(), chunk.begin(), chunk.end());
    sort_records(records);
    return records;
}

std::vector<PofRecord> sweep_random(int count, int n, long long c, const Rational& alpha_cap,
                                    Kind kind, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sweep: empty batch");
    std::vector<std::vector<PofRecord>> chunks(static_cast<std::size_t>(count));
    std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
        try {
            Instance inst =
                gen_random(n, c, alpha_cap, kind, 2, seed + static_cast<std::uint64_t>(i));
            chunks[static_cast<std::size_t>(i)] = records_for(inst);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<PofRecord> records;
    for (auto& chunk : chunks)
        records.insert(records.end(), chunk.begin(), chunk.end());
    sort_records(records);
    return records;
}

void write_records_csv(std::ostream& os, const std::vector<PofRecord>& records) {
    os << "label,scenario,criterion,alpha_num,alpha_den,zstar,zfair,pof_num,pof_den,"
          "lb_num,lb_den,ub_num,ub_den,within\n";
    for (const auto& r : records) {
        os << r.label << ',' << kind_name(r.kind) << ',' << criterion_name(r.criterion) << ','
           << r.alpha.num() << ',' << r.alpha.den() << ',' << r.zstar << ',' << r.zfair << ','
           << r.pof.num() << ',' << r.pof.den() << ',' << r.bounds.lower.num() << ','
           << r.bounds.lower.den() << ',' << r.bounds.upper.num() << ',' << r.bounds.upper.den()
           << ',' << (r.within ? "true" : "false") << '\n';
    }
}

}  // namespace fairsum
