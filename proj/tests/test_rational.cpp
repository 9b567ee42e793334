#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cheb/rational.hpp"

using namespace cheb;

TEST_CASE("parse_rational accepts fractions, decimals and exponents") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-3/4") == rat(-3, 4));
    CHECK(parse_rational("0.25") == rat(1, 4));
    CHECK(parse_rational("2.5") == rat(5, 2));
    CHECK(parse_rational("1e-12") == rat(Integer(1), Integer("1000000000000")));
    CHECK(parse_rational("1.5e2") == rat(150));
    CHECK(parse_rational("7") == rat(7));
    CHECK_THROWS_AS(parse_rational("a/b"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("rat_pow") {
    CHECK(rat_pow(rat(2, 3), 0) == rat(1));
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(-1, 2), 2) == rat(1, 4));
}

TEST_CASE("decimal_string rounds half to even") {
    CHECK(decimal_string(rat(1, 3), 6) == "0.333333");
    CHECK(decimal_string(rat(2, 3), 6) == "0.666667");
    CHECK(decimal_string(rat(1, 8), 2) == "0.12");   // 0.125 -> even
    CHECK(decimal_string(rat(3, 8), 2) == "0.38");   // 0.375 -> even
    CHECK(decimal_string(rat(5, 2), 0) == "2");
    CHECK(decimal_string(rat(7, 2), 0) == "4");
    CHECK(decimal_string(rat(-1, 8), 2) == "-0.12");
    CHECK(decimal_string(rat(91, 22), 6) == "4.136364");
}

TEST_CASE("significant_string carries seven significant digits") {
    CHECK(significant_string(rat(91, 22)) == "4.136364");
    CHECK(significant_string(rat(712, 165)) == "4.315152");
    CHECK(significant_string(parse_rational("29.710744")) == "29.71074");
    CHECK(significant_string(parse_rational("562.38512")) == "562.3851");
    CHECK(significant_string(rat(1, 3)) == "0.3333333");
    CHECK(significant_string(rat(2)) == "2.000000");
    CHECK(significant_string(rat(1)) == "1.000000");
    // half-to-even at the seventh digit
    CHECK(significant_string(parse_rational("4.4090905")) == "4.409090");
    CHECK(significant_string(parse_rational("4.4090915")) == "4.409092");
    // rounding may gain an integer digit
    CHECK(significant_string(parse_rational("9.9999999")) == "10.00000");
}

TEST_CASE("fraction_string") {
    CHECK(fraction_string(rat(717, 165)) == "239/55");  // reduces through gcd 3
    CHECK(fraction_string(rat(4)) == "4/1");
}
