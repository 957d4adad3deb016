#pragma once

// Text form for polynomials and operator words.
//
// Grammar (whitespace insensitive):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := primary ['^' integer]
//   primary:= rational | name | '(' expr ')'
// A rational is digits or digits/digits; a name is an identifier. In word
// context, names of the shape e<number> denote generators and order within a
// term is kept; everywhere else such names are rejected. Products of sums
// are expanded, so the result is always a flat list of terms.

#include "algq/poly.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace algq {

struct parse_error : value_error {
  using value_error::value_error;
};

// One expanded product: coefficient times an ordered run of factors, each a
// variable name or a 1-based generator index.
struct ParsedTerm {
  Rational coeff{1};
  std::vector<std::variant<std::string, int>> factors;
};

std::vector<ParsedTerm> parse_terms(std::string_view src, bool allow_generators);

Poly parse_poly(std::string_view src);

}  // namespace algq
