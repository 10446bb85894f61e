#include "doctest.h"
#include "lq/rational.hpp"
#include "naive_oracles.hpp"

using namespace lq;

TEST_CASE("parsing accepts exactly the rational grammar") {
    CHECK(parse_rat("0") == Rat(0));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-2/4") == Rat(-1, 2));
    CHECK(rat_str(parse_rat("10/4")) == "5/2");
    CHECK(rat_str(Rat(-3)) == "-3");

    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("+1"), std::invalid_argument);
}

TEST_CASE("stored form is lowest terms with positive denominator") {
    for (const char* text : {"4/8", "-9/12", "30/5", "-1/1"}) {
        Rat v = parse_rat(text);
        CHECK(gcd(abs(numerator(v)), denominator(v)) == 1);
        CHECK(denominator(v) > 0);
    }
}

TEST_CASE("field axioms on randomized exact inputs") {
    naive::RatGen gen(42);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = gen.next(), b = gen.next(), c = gen.next();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rat(0) == a);
        CHECK(a * Rat(1) == a);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * rat_div(Rat(1), a) == Rat(1));
    }
}

TEST_CASE("division by zero is rejected, not a value") {
    CHECK_THROWS_AS(rat_div(Rat(1), Rat(0)), std::domain_error);
}

TEST_CASE("no precision loss on large numerators") {
    Rat big = parse_rat("123456789012345678901234567890/7");
    CHECK(rat_str(big * 7) == "123456789012345678901234567890");
}
