#include "doctest.h"

#include "algq/rational.hpp"
#include "support/gen.hpp"

using algq::Rational;

TEST_CASE("rationals stay reduced with positive denominator") {
  testgen::Rng rng(101);
  for (int i = 0; i < 500; ++i) {
    Rational a = testgen::rational(rng, 40);
    Rational b = testgen::nonzero_rational(rng, 40);
    for (Rational v : {a + b, a - b, a * b, a / b}) {
      CHECK(denominator(v) >= 1);
      CHECK(gcd(numerator(v) < 0 ? algq::Integer(-numerator(v)) : numerator(v),
                denominator(v)) == 1);
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(algq::parse_rational("3/2") == Rational(3, 2));
  CHECK(algq::parse_rational("-3/2") == Rational(-3, 2));
  CHECK(algq::parse_rational("4/6") == Rational(2, 3));
  CHECK(algq::parse_rational("-0") == 0);
  CHECK(algq::parse_rational("+7") == 7);
  CHECK_THROWS_AS(algq::parse_rational(""), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("1/"), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("/2"), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("1/0"), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("1.5"), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("a"), algq::value_error);
  CHECK_THROWS_AS(algq::parse_rational("1/2/3"), algq::value_error);
}

TEST_CASE("rational formatting") {
  CHECK(algq::to_string(Rational(3, 2)) == "3/2");
  CHECK(algq::to_string(Rational(-3, 2)) == "-3/2");
  CHECK(algq::to_string(Rational(10, 5)) == "2");
  CHECK(algq::to_string(Rational(0)) == "0");
  // a big value, exercising arbitrary precision
  Rational big("123456789123456789123456789/2");
  CHECK(algq::to_string(big * 2) == "123456789123456789123456789");
}
