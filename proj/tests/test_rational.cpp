#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <limits>

#include "injcol/rational.hpp"

using injcol::Rational;
using injcol::RationalOverflow;

TEST_CASE("rationals are kept reduced with a positive denominator")
{
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
}

TEST_CASE("arithmetic is exact")
{
    Rational a(3, 13), b(1, 13);
    CHECK(Rational(2) + a * Rational(2) + b * Rational(4) == Rational(36, 13));
    CHECK(Rational(3) - a == Rational(36, 13));
    CHECK(Rational(14, 5) - Rational(12, 5) == Rational(2, 5));
    CHECK(Rational(5) - Rational(5) * Rational(2, 5) - Rational(2) * Rational(1, 5) + Rational(3) * Rational(1, 15) ==
          Rational(14, 5));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("comparison is exact near the hypothesis bounds")
{
    CHECK(Rational(84, 35) < Rational(36, 13));
    CHECK_FALSE(Rational(36, 13) < Rational(36, 13));
    CHECK(Rational(36, 13) < Rational(14, 5));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("overflow is reported rather than wrapped")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), RationalOverflow);
    CHECK_THROWS_AS(Rational(big) * Rational(2), RationalOverflow);
    CHECK(Rational(big) * Rational(1, 2) == Rational(big, 2));
}

TEST_CASE("string forms and parsing")
{
    CHECK(Rational(36, 13).str() == "36/13");
    CHECK(Rational(3).str() == "3");
    CHECK(Rational(3).fraction_str() == "3/1");
    CHECK(Rational::parse("14/5") == Rational(14, 5));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}
