#include "fairsum/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fairsum {

using nlohmann::json;

long long Instance::total_weight() const {
    long long t = 0;
    for (const auto& list : items)
        for (long long w : list) t += w;
    return t;
}

long long Instance::max_weight() const {
    long long m = 0;
    for (const auto& list : items)
        for (long long w : list) m = std::max(m, w);
    return m;
}

std::size_t Instance::item_count() const {
    std::size_t n = 0;
    for (const auto& list : items) n += list.size();
    return n;
}

Instance make_instance(Kind kind, long long capacity, int agent_count,
                       std::vector<std::vector<long long>> items, std::string label) {
    if (capacity <= 0) throw std::invalid_argument("capacity must be positive");
    if (agent_count < 2) throw std::invalid_argument("agent count must be at least 2");
    const std::size_t expected = kind == Kind::Separate ? static_cast<std::size_t>(agent_count) : 1u;
    if (items.size() != expected)
        throw std::invalid_argument("wrong list count for kind: expected " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(items.size()));
    for (const auto& list : items)
        for (long long w : list) {
            if (w < 0) throw std::invalid_argument("negative weight");
            if (w > capacity) throw std::invalid_argument("weight exceeds capacity");
        }
    Instance inst;
    inst.kind = kind;
    inst.capacity = capacity;
    inst.agent_count = agent_count;
    inst.items = std::move(items);
    inst.label = std::move(label);
    inst.trivial = inst.total_weight() <= capacity;
    return inst;
}

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed instance document: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("instance document must be an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "kind" && key != "c" && key != "k" && key != "items" && key != "label")
            throw std::invalid_argument("unknown field: " + key);
    }
    if (!doc.contains("kind") || !doc.contains("c") || !doc.contains("items"))
        throw std::invalid_argument("missing required field (kind, c, items)");

    const std::string kind_str = doc["kind"].get<std::string>();
    Kind kind;
    if (kind_str == "separate") kind = Kind::Separate;
    else if (kind_str == "shared") kind = Kind::Shared;
    else throw std::invalid_argument("kind must be \"separate\" or \"shared\"");

    if (!doc["c"].is_number_integer()) throw std::invalid_argument("c must be an integer");
    long long c = doc["c"].get<long long>();
    int k = 2;
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer()) throw std::invalid_argument("k must be an integer");
        k = doc["k"].get<int>();
    }
    if (!doc["items"].is_array()) throw std::invalid_argument("items must be an array of arrays");
    std::vector<std::vector<long long>> items;
    for (const auto& list : doc["items"]) {
        if (!list.is_array()) throw std::invalid_argument("items must be an array of arrays");
        std::vector<long long> weights;
        for (const auto& w : list) {
            if (!w.is_number_integer()) throw std::invalid_argument("weights must be integers");
            weights.push_back(w.get<long long>());
        }
        items.push_back(std::move(weights));
    }
    std::string label = doc.contains("label") ? doc["label"].get<std::string>() : "";
    return make_instance(kind, c, k, std::move(items), std::move(label));
}

std::string emit_instance(const Instance& inst) {
    json doc;
    doc["kind"] = kind_name(inst.kind);
    doc["c"] = inst.capacity;
    doc["k"] = inst.agent_count;
    doc["items"] = inst.items;
    if (!inst.label.empty()) doc["label"] = inst.label;
    return doc.dump();
}

Rational alpha_of(const Instance& inst) {
    if (inst.item_count() == 0) throw std::invalid_argument("alpha_of: empty item lists");
    return Rational(inst.max_weight(), inst.capacity);
}

namespace {

// Scales a rational weight by D, requiring an integral result.
long long scaled(const Rational& w, long long D, const char* what) {
    Rational v = w * Rational(D);
    if (v.den() != 1)
        throw std::invalid_argument(std::string("non-integer scaled weight for ") + what);
    return v.num();
}

std::string format_label(const std::string& name, const FamilyParams& p) {
    std::ostringstream os;
    os << name << ":D=" << p.scale;
    if (!p.eps.is_zero()) os << ";eps=" << p.eps.str();
    if (!p.eps2.is_zero()) os << ";eps2=" << p.eps2.str();
    if (!p.alpha.is_zero()) os << ";alpha=" << p.alpha.str();
    if (p.r > 0) os << ";r=" << p.r;
    if (p.h > 0) os << ";h=" << p.h;
    if (p.k > 0) os << ";k=" << p.k;
    return os.str();
}

}  // namespace

std::vector<std::string> family_names() {
    return {"sep-two-solutions", "sep-large-alpha", "sep-r-blocks", "shared-large-alpha",
            "shared-odd-blocks", "k3-mm-beats-pf",  "ks-below",     "ks-above",
            "pf-tight-k"};
}

Instance gen_family(const std::string& name, const FamilyParams& params) {
    FamilyParams p = params;
    if (p.scale <= 0) throw std::invalid_argument("family scale D must be positive");
    const long long D = p.scale;
    if (p.eps.is_zero()) p.eps = Rational(1, D);
    if (p.eps2.is_zero()) p.eps2 = Rational(1, D);
    const Rational one(1);
    const std::string label = format_label(name, p);

    if (name == "sep-two-solutions") {
        // A = {1, eps}, B = {eps, eps}
        long long e = scaled(p.eps, D, "eps");
        return make_instance(Kind::Separate, D, 2, {{D, e}, {e, e}}, label);
    }
    if (name == "sep-large-alpha") {
        // A = {alpha, 2 eps}, B = {1 - alpha + eps, eps2}; alpha in [2/3, 1)
        if (p.alpha.is_zero()) throw std::invalid_argument("sep-large-alpha requires alpha");
        if (p.alpha < Rational(2, 3) || p.alpha >= one)
            throw std::invalid_argument("sep-large-alpha requires alpha in [2/3, 1)");
        long long a1 = scaled(p.alpha, D, "alpha");
        long long a2 = scaled(p.eps * Rational(2), D, "2*eps");
        long long b1 = scaled(one - p.alpha + p.eps, D, "1-alpha+eps");
        long long b2 = scaled(p.eps2, D, "eps2");
        return make_instance(Kind::Separate, D, 2, {{a1, a2}, {b1, b2}}, label);
    }
    if (name == "sep-r-blocks") {
        // A = r items of 1/r, B = r items of eps
        if (p.r < 2) throw std::invalid_argument("sep-r-blocks requires r >= 2");
        if (D % p.r != 0) throw std::invalid_argument("sep-r-blocks requires r | D");
        long long e = scaled(p.eps, D, "eps");
        std::vector<long long> a(p.r, D / p.r), b(p.r, e);
        return make_instance(Kind::Separate, D, 2, {a, b}, label);
    }
    if (name == "shared-large-alpha") {
        // {alpha, 1-alpha+eps, 1-alpha, eps}; alpha in [2/3, 1)
        if (p.alpha.is_zero()) throw std::invalid_argument("shared-large-alpha requires alpha");
        if (p.alpha < Rational(2, 3) || p.alpha >= one)
            throw std::invalid_argument("shared-large-alpha requires alpha in [2/3, 1)");
        long long w1 = scaled(p.alpha, D, "alpha");
        long long w2 = scaled(one - p.alpha + p.eps, D, "1-alpha+eps");
        long long w3 = scaled(one - p.alpha, D, "1-alpha");
        long long w4 = scaled(p.eps, D, "eps");
        return make_instance(Kind::Shared, D, 2, {{w1, w2, w3, w4}}, label);
    }
    if (name == "shared-odd-blocks") {
        // 2h+1 items of 1/(2h+1) plus two items of eps
        if (p.h < 1) throw std::invalid_argument("shared-odd-blocks requires h >= 1");
        long long m = 2LL * p.h + 1;
        if (D % m != 0) throw std::invalid_argument("shared-odd-blocks requires (2h+1) | D");
        long long e = scaled(p.eps, D, "eps");
        std::vector<long long> w(static_cast<std::size_t>(m), D / m);
        w.push_back(e);
        w.push_back(e);
        return make_instance(Kind::Shared, D, 2, {w}, label);
    }
    if (name == "k3-mm-beats-pf") {
        // a = {1/5+2e, 1/5+e}, b = {1/2+5e, 1/2+e}, c = {1/4+7e, 1/4+11e}
        auto item = [&](Rational base, int mult) {
            return scaled(base + p.eps * Rational(mult), D, "k3 weight");
        };
        std::vector<std::vector<long long>> lists = {
            {item(Rational(1, 5), 2), item(Rational(1, 5), 1)},
            {item(Rational(1, 2), 5), item(Rational(1, 2), 1)},
            {item(Rational(1, 4), 7), item(Rational(1, 4), 11)}};
        return make_instance(Kind::Separate, D, 3, std::move(lists), label);
    }
    if (name == "ks-below") {
        // A = {1, 1/4+eps', 1/4, 1/4}, B = {1-3eps, 1/4, 1/4, 1/4-eps}, eps' = eps2
        if (params.eps2.is_zero()) p.eps2 = p.eps / Rational(2);
        if (!(Rational(0) < p.eps2 && p.eps2 < p.eps))
            throw std::invalid_argument("ks-below requires 0 < eps2 < eps");
        Rational q(1, 4);
        std::vector<std::vector<long long>> lists = {
            {D, scaled(q + p.eps2, D, "a2"), scaled(q, D, "a3"), scaled(q, D, "a4")},
            {scaled(one - p.eps * Rational(3), D, "b1"), scaled(q, D, "b2"),
             scaled(q, D, "b3"), scaled(q - p.eps, D, "b4")}};
        return make_instance(Kind::Separate, D, 2, std::move(lists), label);
    }
    if (name == "ks-above") {
        // A = {1, 3/4, 1/2+eps}, B = {1/4-eps, 1/4-2eps, 0}; needs eps < 1/10
        if (p.eps >= Rational(1, 10))
            throw std::invalid_argument("ks-above requires eps < 1/10");
        std::vector<std::vector<long long>> lists = {
            {D, scaled(Rational(3, 4), D, "a2"), scaled(Rational(1, 2) + p.eps, D, "a3")},
            {scaled(Rational(1, 4) - p.eps, D, "b1"),
             scaled(Rational(1, 4) - p.eps * Rational(2), D, "b2"), 0}};
        return make_instance(Kind::Separate, D, 2, std::move(lists), label);
    }
    if (name == "pf-tight-k") {
        // agent 1 = {1, 1/k}, agents 2..k = {eps}
        if (p.k < 2) throw std::invalid_argument("pf-tight-k requires k >= 2");
        if (D % p.k != 0) throw std::invalid_argument("pf-tight-k requires k | D");
        long long e = scaled(p.eps, D, "eps");
        std::vector<std::vector<long long>> lists;
        lists.push_back({D, D / p.k});
        for (int j = 1; j < p.k; ++j) lists.push_back({e});
        return make_instance(Kind::Separate, D, p.k, std::move(lists), label);
    }
    throw std::invalid_argument("unknown family: " + name);
}

Instance gen_random(int n, long long c, const Rational& alpha_cap, Kind kind, int k,
                    std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random: n must be >= 1");
    if (!(Rational(0) < alpha_cap && alpha_cap <= Rational(1)))
        throw std::invalid_argument("gen_random: alpha_cap must be in (0, 1]");
    const long long wmax = (alpha_cap * Rational(c)).num() / (alpha_cap * Rational(c)).den();
    if (wmax < 1) throw std::invalid_argument("gen_random: floor(alpha_cap*c) < 1");

    const int lists = kind == Kind::Separate ? k : 1;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> dist(1, wmax);

    // Non-triviality is unattainable when even all-maximal weights fit; the
    // instance is then returned as-is and carries the trivial flag.
    const bool can_be_nontrivial =
        static_cast<long long>(lists) * n * wmax > c;

    std::vector<std::vector<long long>> items;
    for (int attempt = 0;; ++attempt) {
        items.assign(lists, {});
        long long total = 0;
        for (auto& list : items)
            for (int i = 0; i < n; ++i) {
                long long w = dist(rng);
                list.push_back(w);
                total += w;
            }
        if (total > c || !can_be_nontrivial || attempt > 10000) break;
    }
    std::ostringstream label;
    label << "random:" << seed << ";n=" << n << ";c=" << c << ";cap=" << alpha_cap.str()
          << ";kind=" << kind_name(kind) << ";k=" << k;
    return make_instance(kind, c, k, std::move(items), label.str());
}

}  // namespace fairsum
