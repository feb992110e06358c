#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fairsum/instance.hpp"
#include "fairsum/pof.hpp"

using namespace fairsum;

TEST_CASE("separate MM/KS curve values") {
    auto b = bound_mm_separate(Rational(3, 4));
    CHECK(b.lower == Rational(2, 3));
    CHECK(b.upper == Rational(2, 3));
    CHECK(bound_mm_separate(Rational(1)).upper == Rational(1));
    CHECK(bound_mm_separate(Rational(9, 10)).upper == Rational(8, 9));

    b = bound_mm_separate(Rational(11, 20));
    CHECK(b.lower == Rational(1, 2));
    CHECK(b.upper == Rational(1, 2));

    b = bound_mm_separate(Rational(2, 5));
    CHECK(b.lower == Rational(1, 3));
    CHECK(b.upper == Rational(2, 5));

    // KS shares the MM curve.
    CHECK(bound_ks_separate(Rational(3, 4)).upper == bound_mm_separate(Rational(3, 4)).upper);
    CHECK(bound_ks_separate(Rational(2, 5)).lower == Rational(1, 3));

    CHECK_THROWS_AS(bound_mm_separate(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(bound_mm_separate(Rational(3, 2)), std::invalid_argument);
}

TEST_CASE("separate PF curve values") {
    CHECK(bound_pf_separate(Rational(3, 4)).upper == Rational(1, 2));
    CHECK(bound_pf_separate(Rational(1, 2)).upper == Rational(1, 2));
    auto b = bound_pf_separate(Rational(3, 10));
    CHECK(b.lower == Rational(1, 4));
    CHECK(b.upper == Rational(3, 10));
}

TEST_CASE("shared MM curve values") {
    auto b = bound_mm_shared(Rational(3, 4));
    CHECK(b.lower == Rational(1, 2));
    CHECK(b.upper == Rational(1, 2));
    CHECK(bound_mm_shared(Rational(1)).upper == Rational(1));
    CHECK(bound_mm_shared(Rational(1, 2)).upper == Rational(1, 3));
    b = bound_mm_shared(Rational(1, 4));
    CHECK(b.lower == Rational(1, 5));
    CHECK(b.upper == Rational(1, 4));
}

TEST_CASE("curve pieces meet at the breakpoints") {
    // 2 - 1/alpha equals 1/2 at alpha = 2/3.
    CHECK(bound_mm_separate(Rational(2, 3)).upper == Rational(1, 2));
    // alpha tends to 1/2 from below: upper piece alpha meets the plateau 1/2.
    CHECK(bound_mm_separate(Rational(499, 1000)).upper == Rational(499, 1000));
    // 2 alpha - 1 equals 1/3 at alpha = 2/3 from above.
    CHECK(bound_mm_shared(Rational(2, 3)).upper == Rational(1, 3));
    CHECK(bound_mm_shared(Rational(667, 1000)).upper == Rational(334, 1000));
}

TEST_CASE("curves are monotone nondecreasing in alpha") {
    auto grid = [] {
        std::vector<Rational> g;
        for (int i = 1; i <= 200; ++i) g.emplace_back(i, 200);
        return g;
    }();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(bound_mm_separate(grid[i - 1]).upper <= bound_mm_separate(grid[i]).upper);
        CHECK(bound_pf_separate(grid[i - 1]).upper <= bound_pf_separate(grid[i]).upper);
        CHECK(bound_mm_shared(grid[i - 1]).upper <= bound_mm_shared(grid[i]).upper);
        CHECK(bound_mm_separate(grid[i]).lower <= bound_mm_separate(grid[i]).upper);
        CHECK(bound_pf_separate(grid[i]).lower <= bound_pf_separate(grid[i]).upper);
        CHECK(bound_mm_shared(grid[i]).lower <= bound_mm_shared(grid[i]).upper);
    }
}

TEST_CASE("general PF bound and k > 2 fallback") {
    CHECK(bound_pf_general(2) == Rational(1, 2));
    CHECK(bound_pf_general(3) == Rational(2, 3));
    CHECK(bound_pf_general(5) == Rational(4, 5));
    CHECK_THROWS_AS(bound_pf_general(1), std::invalid_argument);

    auto b = bound_for(Kind::Separate, Criterion::MM, Rational(2, 5), 3);
    CHECK(b.upper == Rational(2, 5));
    CHECK(bound_for(Kind::Separate, Criterion::PF, Rational(2, 5), 4).upper == Rational(3, 4));
    CHECK(bound_for(Kind::Shared, Criterion::KS, Rational(3, 4), 2).upper == Rational(1, 2));
    CHECK(bound_for(Kind::Shared, Criterion::PF, Rational(3, 4), 2).upper == Rational(0));
}

TEST_CASE("bertsimas interval encloses the closed form tightly") {
    // Equal bests, k = 2: the bound is 3/2 - sqrt(2), about 0.0857864.
    auto iv = bertsimas_bound({100, 100}, 2);
    CHECK(iv.lower <= iv.upper);
    CHECK(iv.lower.approx() == doctest::Approx(0.08578644).epsilon(1e-5));
    CHECK(iv.upper.approx() == doctest::Approx(0.08578644).epsilon(1e-5));
    CHECK((iv.upper - iv.lower) <= Rational(1, 100000));

    // Very unequal bests push the correction toward zero from (k-1)/k + F.
    auto skew = bertsimas_bound({1, 1000}, 2);
    CHECK(skew.lower.approx() ==
          doctest::Approx(0.5 + 1.0 / 1001 - (2 * std::sqrt(2.0) - 1) / 2 / 1000).epsilon(1e-6));

    CHECK_THROWS_AS(bertsimas_bound({100}, 2), std::invalid_argument);
    CHECK_THROWS_AS(bertsimas_bound({0, 0}, 2), std::domain_error);
}

TEST_CASE("gap ratio between upper and lower curve") {
    CHECK(gap_ratio(Rational(2, 5), Kind::Separate) == Rational(6, 5));
    CHECK(gap_ratio(Rational(1, 3), Kind::Separate) == Rational(1));
    CHECK(gap_ratio(Rational(1, 4), Kind::Shared) == Rational(5, 4));
    CHECK(gap_ratio(Rational(1, 5), Kind::Shared) == Rational(7, 5));
    CHECK_THROWS_AS(gap_ratio(Rational(3, 4), Kind::Separate), std::invalid_argument);
    CHECK_THROWS_AS(gap_ratio(Rational(1, 2), Kind::Shared), std::invalid_argument);
}

TEST_CASE("per-instance PoF records") {
    Instance inst = make_instance(Kind::Separate, 100, 2, {{100, 1}, {1, 1}}, "two");
    auto records = records_for(inst);
    REQUIRE(records.size() == 2);  // PF does not exist here
    CHECK(records[0].criterion == Criterion::MM);
    CHECK(records[0].zstar == 100);
    CHECK(records[0].zfair == 3);
    CHECK(records[0].pof == Rational(97, 100));
    CHECK(records[0].alpha == Rational(1));
    CHECK(records[0].within);

    Instance sh = make_instance(Kind::Shared, 100, 2, {{75, 26, 25, 1}}, "shared4");
    auto shr = records_for(sh);
    REQUIRE(shr.size() >= 2);
    CHECK(shr[0].criterion == Criterion::MM);
    CHECK(shr[0].pof == Rational(48, 100));
    CHECK(shr[0].bounds.upper == Rational(1, 2));
    CHECK(shr[0].within);
}

TEST_CASE("family sweep hits the curve within the construction slack") {
    auto recs = sweep_family("sep-large-alpha", {Rational(3, 4)}, {Rational(1, 100)}, {});
    REQUIRE(!recs.empty());
    bool saw_mm = false, saw_ks = false;
    for (const auto& r : recs) {
        CHECK(r.within);
        if (r.criterion != Criterion::PF) {
            (r.criterion == Criterion::MM ? saw_mm : saw_ks) = true;
            // D = 800, A = {600, 16}, B = {208, 1}: the fair point is (16, 209)
            // against the optimum (616, 1) for both criteria.
            CHECK(r.pof == Rational(392, 617));
            CHECK(r.bounds.upper == Rational(2, 3));
            CHECK(r.bounds.upper - r.pof <= Rational(10, 100));
        }
    }
    CHECK(saw_mm);
    CHECK(saw_ks);

    auto shared = sweep_family("shared-odd-blocks", {}, {Rational(1, 99)}, {1});
    bool saw = false;
    for (const auto& r : shared) {
        CHECK(r.within);
        if (r.criterion == Criterion::MM) {
            saw = true;
            CHECK(r.pof == Rational(31, 99));
            CHECK(r.bounds.upper == Rational(1, 3));
        }
    }
    CHECK(saw);

    CHECK_THROWS_AS(sweep_family("sep-large-alpha", {}, {Rational(1, 100)}, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep_family("sep-large-alpha", {Rational(3, 4)}, {}, {}),
                    std::invalid_argument);
}

TEST_CASE("random sweep is deterministic and within bounds") {
    auto a = sweep_random(20, 7, 40, Rational(1, 2), Kind::Separate, 11);
    auto b = sweep_random(20, 7, 40, Rational(1, 2), Kind::Separate, 11);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].label == b[i].label);
        CHECK(a[i].pof == b[i].pof);
        CHECK(a[i].within);
    }
}

TEST_CASE("CSV layout") {
    Instance inst = make_instance(Kind::Separate, 100, 2, {{100, 1}, {1, 1}}, "two");
    std::ostringstream os;
    write_records_csv(os, records_for(inst));
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line ==
          "label,scenario,criterion,alpha_num,alpha_den,zstar,zfair,pof_num,pof_den,"
          "lb_num,lb_den,ub_num,ub_den,within");
    REQUIRE(std::getline(is, line));
    CHECK(line == "two,separate,mm,1,1,100,3,97,100,1,1,1,1,true");
    REQUIRE(std::getline(is, line));
    CHECK(line == "two,separate,ks,1,1,100,3,97,100,1,1,1,1,true");
    CHECK_FALSE(std::getline(is, line));
}
