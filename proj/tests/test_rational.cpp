#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairsum/rational.hpp"

using fairsum::Rational;
using fairsum::parse_rational;

TEST_CASE("construction reduces to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    // 1/3 + 1/6 in doubles is not exactly 1/2; rationals must not drift.
    Rational acc(0);
    for (int i = 0; i < 300; ++i) acc = acc + Rational(1, 300);
    CHECK(acc == Rational(1));
}

TEST_CASE("comparisons avoid intermediate overflow") {
    Rational big(INT64_MAX / 2, 3);
    Rational bigger(INT64_MAX / 2, 2);
    CHECK(big < bigger);
    CHECK(bigger > big);
    CHECK(big <= big);
    CHECK(big >= big);
    CHECK(big != bigger);
}

TEST_CASE("overflow of a reduced result throws") {
    Rational m(INT64_MAX, 1);
    CHECK_THROWS_AS(m * Rational(2), std::overflow_error);
    CHECK_THROWS_AS(m + m, std::overflow_error);
    // Large intermediates that reduce back into range are fine.
    Rational x(INT64_MAX / 3, 7);
    CHECK(x * Rational(7, INT64_MAX / 3) == Rational(1));
}

TEST_CASE("string round-trip") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-3, 7).str() == "-3/7");
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-3/7") == Rational(-3, 7));
    CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("min max helpers") {
    CHECK(fairsum::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
    CHECK(fairsum::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
}
