#include <doctest.h>

#include "format.hpp"
#include "support/test_rng.hpp"

using sbq::Number;
using sbq::cli::format_number;
using sbq::cli::parse_number;
using sbq::cli::ParseError;

TEST_CASE("parse: symbolic form") {
  CHECK(parse_number("1 - e7") == Number(1, 0, 0, 0, 0, 0, 0, -1));
  CHECK(parse_number("e3") == Number::unit(3));
  CHECK(parse_number("-e7") == -Number::unit(7));
  CHECK(parse_number("0") == Number::zero());
  CHECK(parse_number("2e1 + 3e1") == Number(0, 5, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number("1.5 + 2.5e2 - 3e3") == Number(1.5, 0, 2.5, -3, 0, 0, 0, 0));
  CHECK(parse_number("+2") == Number(2, 0, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number(".5") == Number(0.5, 0, 0, 0, 0, 0, 0, 0));
}

TEST_CASE("parse: vector form") {
  CHECK(parse_number("[0,1,0,0,0,0,0,0]") == Number::unit(1));
  CHECK(parse_number("[ 1, -2, 3.5, 0, 0, 0, 0, 1e3 ]") ==
        Number(1, -2, 3.5, 0, 0, 0, 0, 1000));
}

TEST_CASE("parse: exponent vs basis disambiguation") {
  CHECK(parse_number("2e-3") == Number(0.002, 0, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number("2e+3") == Number(2000, 0, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number("2e12") == Number(2e12, 0, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number("2e8") == Number(2e8, 0, 0, 0, 0, 0, 0, 0));
  CHECK(parse_number("1e7") == Number::unit(7));  // bare digit 0..7 is a basis
  CHECK(parse_number("2.5e-3e4") ==
        Number(0, 0, 0, 0, 0.0025, 0, 0, 0));
  CHECK(parse_number("1.25e+02e1") == Number(0, 125, 0, 0, 0, 0, 0, 0));
}

TEST_CASE("parse: whitespace and the unicode minus") {
  CHECK(parse_number("  1\t-  e7 ") == Number(1, 0, 0, 0, 0, 0, 0, -1));
  CHECK(parse_number("1 − e7") == Number(1, 0, 0, 0, 0, 0, 0, -1));
  CHECK(parse_number("−2e4") == Number(0, 0, 0, 0, -2, 0, 0, 0));
}

TEST_CASE("parse: errors carry a position") {
  CHECK_THROWS_AS(parse_number(""), ParseError);
  CHECK_THROWS_AS(parse_number("e8"), ParseError);
  CHECK_THROWS_AS(parse_number("e12"), ParseError);
  CHECK_THROWS_AS(parse_number("1 + "), ParseError);
  CHECK_THROWS_AS(parse_number("1 ++ 2"), ParseError);
  CHECK_THROWS_AS(parse_number("x"), ParseError);
  // whitespace is ignored entirely, so this is just 12
  CHECK(parse_number("1 2") == Number(12, 0, 0, 0, 0, 0, 0, 0));
  CHECK_THROWS_AS(parse_number("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_number("[1,2,3,4,5,6,7,8,9]"), ParseError);
  CHECK_THROWS_AS(parse_number("[1,2,3,4,5,6,7,8] junk"), ParseError);
  CHECK_THROWS_AS(parse_number("nan"), ParseError);
  CHECK_THROWS_AS(parse_number("[inf,0,0,0,0,0,0,0]"), ParseError);
  CHECK_THROWS_AS(parse_number("1e309"), ParseError);  // overflows a double
  try {
    parse_number("1 + e9");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);  // the offending digit, original text offsets
  }
}

TEST_CASE("format: symbolic output") {
  CHECK(format_number(Number::unit(3)) == "e3");
  CHECK(format_number(Number(1, 0, 0, 0, 0, 0, 0, 1)) == "1 + e7");
  CHECK(format_number(Number::zero()) == "0");
  CHECK(format_number(Number(0, -1, 0, 0, 0, 0, 0, 0)) == "-e1");
  CHECK(format_number(Number(-1.5, 2, 0, 0, 0, 0, -1, 0)) ==
        "-1.5 + 2e1 - e6");
  CHECK(format_number(Number(0.25, 0, 0, 0, 0, 0, 0, 0), 3) == "0.25");
}

TEST_CASE("format respects precision") {
  const Number x(1.0 / 3.0, 0, 0, 0, 0, 0, 0, 0);
  CHECK(format_number(x, 3) == "0.333");
  CHECK(format_number(x, 12) == "0.333333333333");
}

TEST_CASE("round-trip: parse(format(x, 17)) is exact") {
  sbq::testing::Rng rng(70);
  for (int t = 0; t < 10000; ++t) {
    const Number x = rng.number();
    CHECK(parse_number(format_number(x, 17)) == x);
  }
  // scales that force scientific notation
  for (int t = 0; t < 500; ++t) {
    const Number x = rng.number() * 1e-120;
    CHECK(parse_number(format_number(x, 17)) == x);
    const Number y = rng.number() * 1e120;
    CHECK(parse_number(format_number(y, 17)) == y);
  }
}
