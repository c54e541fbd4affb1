#include <catch2/catch_amalgamated.hpp>

#include "idlkit/value.hpp"
#include "idlkit/wildcard.hpp"

using namespace idlkit;

TEST_CASE("decimal parses and renders terminating decimals exactly") {
    CHECK(Decimal::parse("0").str() == "0");
    CHECK(Decimal::parse("42").str() == "42");
    CHECK(Decimal::parse("-42").str() == "-42");
    CHECK(Decimal::parse("3.14").str() == "3.14");
    CHECK(Decimal::parse("-0.25").str() == "-0.25");
    CHECK(Decimal::parse("10.10").str() == "10.1");
    CHECK(Decimal::parse("0.5000").str() == "0.5");
    CHECK(Decimal::parse("000.5").str() == "0.5");
    CHECK(Decimal::parse("100").str() == "100");
}

TEST_CASE("decimal arithmetic is exact") {
    Decimal a = Decimal::parse("0.1");
    Decimal b = Decimal::parse("0.2");
    CHECK((a + b) == Decimal::parse("0.3")); // fails under binary floating point
    CHECK((Decimal(1) / Decimal(3)) * Decimal(3) == Decimal(1));
    CHECK((Decimal(7) / Decimal(2)).str() == "3.5");
    CHECK((Decimal(1) / Decimal(3)).str() == "1/3");
    CHECK_THROWS_AS(Decimal(1) / Decimal(0), EvalError);
}

TEST_CASE("decimal ordering and integer conversion") {
    CHECK(Decimal::parse("1.5") < Decimal(2));
    CHECK(Decimal(2) > Decimal::parse("1.99"));
    CHECK(Decimal(5).is_integer());
    CHECK_FALSE(Decimal::parse("5.5").is_integer());
    CHECK(Decimal::parse("-17").to_int64() == -17);
    CHECK_THROWS_AS(Decimal::parse("0.5").to_int64(), EvalError);
}

TEST_CASE("value equality crosses numeric kinds but not others") {
    CHECK(value_equal(Value(std::int64_t{3}), Value(Decimal::parse("3.0"))));
    CHECK_FALSE(value_equal(Value(std::int64_t{3}), Value(Decimal::parse("3.5"))));
    CHECK_FALSE(value_equal(Value(true), Value(std::int64_t{1})));
    CHECK_FALSE(value_equal(Value(std::string("3")), Value(std::int64_t{3})));
    CHECK(value_equal(Value(std::string("a")), Value(std::string("a"))));
    CHECK(value_compare(Value(std::int64_t{2}), Value(Decimal::parse("2.5"))) < 0);
    CHECK_THROWS_AS(value_compare(Value(true), Value(false)), EvalError);
}

TEST_CASE("value rendering") {
    CHECK(value_plain(Value(true)) == "true");
    CHECK(value_plain(Value(std::int64_t{-7})) == "-7");
    CHECK(value_literal(Value(std::string("it's"))) == "'it\\'s'");
    CHECK(value_literal(Value(Decimal::parse("2.50"))) == "2.5");
}

TEST_CASE("wildcard matching") {
    CHECK(wildcard_match("test_x", "test_*"));
    CHECK(wildcard_match("test_", "test_*"));
    CHECK_FALSE(wildcard_match("tes", "test_*"));
    CHECK(wildcard_match("abc", "a?c"));
    CHECK_FALSE(wildcard_match("ac", "a?c"));
    CHECK(wildcard_match("", "*"));
    CHECK_FALSE(wildcard_match("", "?"));
    CHECK(wildcard_match("anything", "*"));
    CHECK(wildcard_match("xaybzc", "*a*b*c*"));
    CHECK_FALSE(wildcard_match("xaybz", "*a*b*c*"));
    CHECK(wildcard_match("literal", "literal"));
    CHECK_FALSE(wildcard_match("Literal", "literal")); // case-sensitive
}
