#include <doctest.h>

#include <random>

#include "boxikit/interval.hpp"
#include "boxikit/rational.hpp"

using boxikit::InputError;
using boxikit::Interval;
using boxikit::Rational;

TEST_CASE("rationals normalize to canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational(6, 3).str() == "2/1");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(-Rational(3, 5) == Rational(-3, 5));
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 3) >= Rational(7, 3));
}

TEST_CASE("rational arithmetic overflows loudly, never wraps") {
    Rational huge(std::numeric_limits<std::int64_t>::max(), 1);
    CHECK_THROWS_AS(huge + huge, InputError);
    CHECK_THROWS_AS(huge * Rational(2), InputError);
    // Wide intermediates that reduce back into range are fine.
    Rational big(std::int64_t{1} << 40, 3);
    CHECK((big * Rational(3)) == Rational(std::int64_t{1} << 40));
    // Comparison never overflows even at the extremes.
    CHECK(Rational(std::numeric_limits<std::int64_t>::min(), 3) < huge);
}

TEST_CASE("rational parse/print round trip") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<std::int64_t> num(-600, 600);
    std::uniform_int_distribution<std::int64_t> den(1, 60);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse("banana"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
}

TEST_CASE("interval basics and closed overlap") {
    Interval a(Rational(0), Rational(1));
    Interval b(Rational(1), Rational(2));
    Interval c(Rational(3, 2), Rational(3));
    CHECK(overlaps(a, b));      // touching endpoints intersect
    CHECK(overlaps(b, c));
    CHECK_FALSE(overlaps(a, c));
    CHECK(a.length() == Rational(1));
    Interval point(Rational(2), Rational(2));
    CHECK(point.length() == Rational(0));
    CHECK(overlaps(point, b));
    CHECK_THROWS_AS(Interval(Rational(2), Rational(1)), InputError);
}
