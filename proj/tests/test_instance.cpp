#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fairsum/instance.hpp"

using namespace fairsum;

TEST_CASE("make_instance validates its invariants") {
    CHECK_THROWS_AS(make_instance(Kind::Separate, 0, 2, {{1}, {1}}, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(Kind::Separate, 10, 1, {{1}}, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(Kind::Separate, 10, 2, {{1}}, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(Kind::Shared, 10, 2, {{1}, {2}}, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(Kind::Separate, 10, 2, {{-1}, {1}}, ""), std::invalid_argument);
    CHECK_THROWS_AS(make_instance(Kind::Separate, 10, 2, {{11}, {1}}, ""), std::invalid_argument);

    Instance inst = make_instance(Kind::Separate, 10, 2, {{4, 3}, {5}}, "x");
    CHECK(inst.total_weight() == 12);
    CHECK(inst.max_weight() == 5);
    CHECK(inst.item_count() == 3);
    CHECK_FALSE(inst.trivial);
    CHECK(make_instance(Kind::Separate, 20, 2, {{4, 3}, {5}}, "").trivial);
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_instance("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"separate","c":10})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"both","c":10,"items":[[1],[1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"separate","c":10,"items":[[1],[1]],"bogus":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"separate","c":"10","items":[[1],[1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"separate","c":10,"items":[[1.5],[1]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"separate","c":10,"items":[[1],[20]]})"),
                    std::invalid_argument);
}

TEST_CASE("parse and emit round-trip") {
    const std::string text =
        R"({"kind":"shared","c":100,"k":2,"items":[[75,26,25,1]],"label":"demo"})";
    Instance inst = parse_instance(text);
    CHECK(inst.kind == Kind::Shared);
    CHECK(inst.capacity == 100);
    CHECK(inst.agent_count == 2);
    CHECK(inst.items == std::vector<std::vector<long long>>{{75, 26, 25, 1}});
    CHECK(inst.label == "demo");

    Instance again = parse_instance(emit_instance(inst));
    CHECK(again.kind == inst.kind);
    CHECK(again.capacity == inst.capacity);
    CHECK(again.agent_count == inst.agent_count);
    CHECK(again.items == inst.items);
    CHECK(again.label == inst.label);
    CHECK(emit_instance(again) == emit_instance(inst));

    // k defaults to 2 when omitted.
    CHECK(parse_instance(R"({"kind":"shared","c":5,"items":[[1,2]]})").agent_count == 2);
}

TEST_CASE("alpha_of") {
    Instance inst = make_instance(Kind::Shared, 100, 2, {{75, 26, 25, 1}}, "");
    CHECK(alpha_of(inst) == Rational(3, 4));
}

TEST_CASE("family generators match their constructions") {
    FamilyParams p;
    p.scale = 100;
    p.eps = Rational(1, 100);
    Instance two = gen_family("sep-two-solutions", p);
    CHECK(two.kind == Kind::Separate);
    CHECK(two.capacity == 100);
    CHECK(two.items == std::vector<std::vector<long long>>{{100, 1}, {1, 1}});

    FamilyParams la;
    la.scale = 200;
    la.eps = Rational(1, 100);
    la.alpha = Rational(3, 4);
    Instance sep = gen_family("sep-large-alpha", la);
    CHECK(sep.items == std::vector<std::vector<long long>>{{150, 4}, {52, 1}});

    Instance sh = gen_family("shared-large-alpha", [] {
        FamilyParams q;
        q.scale = 100;
        q.eps = Rational(1, 100);
        q.alpha = Rational(3, 4);
        return q;
    }());
    CHECK(sh.kind == Kind::Shared);
    CHECK(sh.items == std::vector<std::vector<long long>>{{75, 26, 25, 1}});

    Instance blocks = gen_family("shared-odd-blocks", [] {
        FamilyParams q;
        q.scale = 99;
        q.h = 1;
        q.eps = Rational(1, 99);
        return q;
    }());
    CHECK(blocks.items == std::vector<std::vector<long long>>{{33, 33, 33, 1, 1}});

    Instance rb = gen_family("sep-r-blocks", [] {
        FamilyParams q;
        q.scale = 100;
        q.r = 2;
        q.eps = Rational(1, 100);
        return q;
    }());
    CHECK(rb.items == std::vector<std::vector<long long>>{{50, 50}, {1, 1}});

    Instance k3 = gen_family("k3-mm-beats-pf", [] {
        FamilyParams q;
        q.scale = 1000;
        q.eps = Rational(3, 1000);
        return q;
    }());
    CHECK(k3.agent_count == 3);
    CHECK(k3.items ==
          std::vector<std::vector<long long>>{{206, 203}, {515, 503}, {271, 283}});

    Instance ksb = gen_family("ks-below", [] {
        FamilyParams q;
        q.scale = 400;
        q.eps = Rational(1, 100);
        q.eps2 = Rational(1, 200);
        return q;
    }());
    CHECK(ksb.items ==
          std::vector<std::vector<long long>>{{400, 102, 100, 100}, {388, 100, 100, 96}});

    Instance ksa = gen_family("ks-above", [] {
        FamilyParams q;
        q.scale = 100;
        q.eps = Rational(1, 50);
        return q;
    }());
    CHECK(ksa.items == std::vector<std::vector<long long>>{{100, 75, 52}, {23, 21, 0}});

    Instance pfk = gen_family("pf-tight-k", [] {
        FamilyParams q;
        q.scale = 300;
        q.k = 3;
        q.eps = Rational(1, 300);
        return q;
    }());
    CHECK(pfk.agent_count == 3);
    CHECK(pfk.items == std::vector<std::vector<long long>>{{300, 100}, {1}, {1}});
}

TEST_CASE("family generators validate parameters") {
    FamilyParams p;
    p.scale = 100;
    CHECK_THROWS_AS(gen_family("no-such-family", p), std::invalid_argument);
    CHECK_THROWS_AS(gen_family("sep-large-alpha", p), std::invalid_argument);

    FamilyParams bad = p;
    bad.alpha = Rational(1, 2);  // below 2/3
    CHECK_THROWS_AS(gen_family("sep-large-alpha", bad), std::invalid_argument);

    bad = p;
    bad.alpha = Rational(3, 4);
    bad.scale = 101;  // alpha*D not integral
    CHECK_THROWS_AS(gen_family("sep-large-alpha", bad), std::invalid_argument);

    bad = p;
    bad.r = 3;  // 3 does not divide 100
    CHECK_THROWS_AS(gen_family("sep-r-blocks", bad), std::invalid_argument);

    bad = p;
    bad.h = 1;  // 3 does not divide 100
    CHECK_THROWS_AS(gen_family("shared-odd-blocks", bad), std::invalid_argument);

    bad = p;
    bad.eps = Rational(1, 5);  // >= 1/10
    CHECK_THROWS_AS(gen_family("ks-above", bad), std::invalid_argument);

    bad = p;
    bad.eps = Rational(1, 100);
    bad.eps2 = Rational(1, 50);  // eps2 must stay below eps
    CHECK_THROWS_AS(gen_family("ks-below", bad), std::invalid_argument);

    CHECK(family_names().size() == 9);
}

TEST_CASE("random generator is deterministic and respects the weight cap") {
    Instance a = gen_random(8, 60, Rational(1, 2), Kind::Separate, 2, 7);
    Instance b = gen_random(8, 60, Rational(1, 2), Kind::Separate, 2, 7);
    CHECK(a.items == b.items);
    CHECK(a.label == b.label);

    Instance c = gen_random(8, 60, Rational(1, 2), Kind::Separate, 2, 8);
    CHECK(a.items != c.items);

    for (int seed = 0; seed < 50; ++seed) {
        Instance inst = gen_random(6, 40, Rational(1, 3), Kind::Shared, 2, seed);
        CHECK(inst.items.size() == 1);
        CHECK(inst.items[0].size() == 6);
        for (long long w : inst.items[0]) {
            CHECK(w >= 1);
            CHECK(w <= 13);
        }
        CHECK_FALSE(inst.trivial);
    }

    // When even maximal draws fit the capacity the instance stays trivial.
    Instance tiny = gen_random(2, 100, Rational(1, 10), Kind::Shared, 2, 1);
    CHECK(tiny.trivial);

    CHECK_THROWS_AS(gen_random(0, 10, Rational(1, 2), Kind::Shared, 2, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(gen_random(3, 10, Rational(1, 20), Kind::Shared, 2, 0),
                    std::invalid_argument);
}
