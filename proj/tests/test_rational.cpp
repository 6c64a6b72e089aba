#include <catch2/catch_amalgamated.hpp>

#include "dglcp/rational.hpp"

using namespace dglcp;

TEST_CASE("parse_rational accepts integers and fractions") {
    CHECK(parse_rational("7") == rational(7));
    CHECK(parse_rational("-3") == rational(-3));
    CHECK(parse_rational("1/2") == rational(1, 2));
    CHECK(parse_rational("-9/3") == rational(-3));
    CHECK(parse_rational("0") == 0);
    CHECK(parse_rational("0/5") == 0);
}

TEST_CASE("parse_rational canonicalizes non-reduced input") {
    CHECK(format_rational(parse_rational("4/8")) == "1/2");
    CHECK(format_rational(parse_rational("-4/8")) == "-1/2");
    CHECK(format_rational(parse_rational("100/10")) == "10/1");
}

TEST_CASE("parse_rational rejects malformed literals") {
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("-"), input_error);
    CHECK_THROWS_AS(parse_rational("1/"), input_error);
    CHECK_THROWS_AS(parse_rational("/2"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("2/-3"), input_error);
    CHECK_THROWS_AS(parse_rational("a/b"), input_error);
    CHECK_THROWS_AS(parse_rational("1 / 2"), input_error);
}

TEST_CASE("parse_rational rejects zero denominators before GMP sees them") {
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("0/0"), input_error);
    CHECK_THROWS_AS(parse_rational("-5/0"), input_error);
}

TEST_CASE("strict mode rejects anything non-canonical") {
    CHECK(parse_rational("1/2", true) == rational(1, 2));
    CHECK(parse_rational("-7/3", true) == rational(-7, 3));
    CHECK(parse_rational("0", true) == 0);
    CHECK(parse_rational("0/1", true) == 0);
    CHECK_THROWS_AS(parse_rational("4/8", true), input_error);
    CHECK_THROWS_AS(parse_rational("-0", true), input_error);
    CHECK_THROWS_AS(parse_rational("-0/1", true), input_error);
    CHECK_THROWS_AS(parse_rational("0/5", true), input_error);
    CHECK_THROWS_AS(parse_rational("01", true), input_error);
    CHECK_THROWS_AS(parse_rational("1/02", true), input_error);
}

TEST_CASE("format_rational always writes num/den") {
    CHECK(format_rational(rational(2)) == "2/1");
    CHECK(format_rational(rational(0)) == "0/1");
    CHECK(format_rational(rational(-1, 3)) == "-1/3");
}

TEST_CASE("make_rational handles signed denominators and rejects zero") {
    CHECK(format_rational(make_rational(6, -4)) == "-3/2");
    CHECK(format_rational(make_rational(-6, -4)) == "3/2");
    CHECK(format_rational(make_rational(0, -7)) == "0/1");
    CHECK_THROWS_AS(make_rational(1, 0), input_error);
    // the raw int,int constructor is the footgun make_rational exists for:
    // bigint arguments canonicalize, ints send the sign through unsigned
    CHECK(rational(bigint(6), bigint(-4)) == rational(-3, 2));
}

TEST_CASE("round trip through format and parse") {
    const char* cases[] = {"0/1", "2/1", "-1/3", "65535/65536", "-262144/7"};
    for (const char* c : cases)
        CHECK(format_rational(parse_rational(c, true)) == c);
}

TEST_CASE("big values survive exactly") {
    rational big = parse_rational("123456789012345678901234567890/7");
    CHECK(format_rational(big * 7) == "123456789012345678901234567890/1");
}

TEST_CASE("sign helper") {
    CHECK(sign(rational(3, 2)) == 1);
    CHECK(sign(rational(-1, 9)) == -1);
    CHECK(sign(rational(0)) == 0);
}
