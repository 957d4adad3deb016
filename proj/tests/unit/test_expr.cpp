#include "doctest.h"

#include "algq/expr.hpp"

using algq::parse_poly;
using algq::parse_terms;
using algq::Poly;
using algq::Rational;

namespace {
Poly v(const std::string& name) { return Poly::variable(name); }
}  // namespace

TEST_CASE("polynomial literals") {
  CHECK(parse_poly("2*x1^2*xi3 - 1/3*t") ==
        Poly{2} * v("x1").pow(2) * v("xi3") - Rational(1, 3) * v("t"));
  CHECK(parse_poly(" 2 * x1 ^ 2 * xi3-1/3*t ") == parse_poly("2*x1^2*xi3 - 1/3*t"));
  CHECK(parse_poly("-x1 + x1") == Poly{});
  CHECK(parse_poly("0") == Poly{});
  CHECK(parse_poly("(1/2)*t*xi3") == Rational(1, 2) * v("t") * v("xi3"));
  CHECK(parse_poly("(x1+1)*(x1-1)") == v("x1").pow(2) - Poly{1});
  CHECK(parse_poly("(x1+x2)^2") ==
        v("x1").pow(2) + Poly{2} * v("x1") * v("x2") + v("x2").pow(2));
  CHECK(parse_poly("7/2") == Poly{Rational(7, 2)});
  CHECK(parse_poly("x1^0") == Poly{1});
}

TEST_CASE("round trip through the printer") {
  for (const char* s : {"0", "x1", "-x1 + 1", "2*x1^2*xi3 - (1/3)*t",
                        "xi1*xi2 + (1/2)*t*xi3", "5 + t^2"}) {
    CHECK(parse_poly(s).str() == s);
  }
}

TEST_CASE("malformed literals are rejected") {
  for (const char* s : {"", "  ", "x1 +", "2x1", "x1^", "x1^-2", "x1^(2)", "1/0",
                        "x1*", "(x1", "x1)", "x1 x2", "$", "1..2", "x1^1/2"}) {
    CHECK_THROWS_AS(parse_poly(s), algq::parse_error);
  }
}

TEST_CASE("generators only parse in word context") {
  CHECK_THROWS_AS(parse_poly("e1*x1"), algq::parse_error);
  auto terms = parse_terms("x1*e2*e1 - 1/2*e3", true);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coeff == 1);
  REQUIRE(terms[0].factors.size() == 3);
  CHECK(std::get<std::string>(terms[0].factors[0]) == "x1");
  CHECK(std::get<int>(terms[0].factors[1]) == 2);
  CHECK(std::get<int>(terms[0].factors[2]) == 1);
  CHECK(terms[1].coeff == Rational(-1, 2));
  CHECK(std::get<int>(terms[1].factors[0]) == 3);
  // order is preserved under distribution
  auto dist = parse_terms("(e1 + e2)*e1", true);
  REQUIRE(dist.size() == 2);
  CHECK(std::get<int>(dist[0].factors[0]) == 1);
  CHECK(std::get<int>(dist[0].factors[1]) == 1);
  CHECK(std::get<int>(dist[1].factors[0]) == 2);
  CHECK(std::get<int>(dist[1].factors[1]) == 1);
  // e1^2 expands to a repeated letter
  auto sq = parse_terms("e1^2", true);
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].factors.size() == 2);
}
