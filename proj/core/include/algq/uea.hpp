#pragma once

// The enveloping algebra of an algebroid, presented by normal ordering.
//
// Elements are kept in the ordered basis: a term is a coefficient function
// on the base (left factor) times a monomial e1^a1 ... en^an in the frame.
// Arbitrary operator words reduce to this basis with two rewrite rules,
//   e_j e_i -> e_i e_j + sum_k c[j][i][k] e_k          (j > i)
//   e_i f   -> f e_i + rho(e_i) f
// applied until no redex remains. Over an adiabatic algebroid the stored
// structure functions and anchor already carry the factor t, so the same
// two rules produce the t-graded algebra.

#include "algq/algebroid.hpp"
#include "algq/expr.hpp"

#include <functional>
#include <variant>

namespace algq {

// Exponents of e1..en; length == rank.
using MultiIndex = std::vector<std::uint32_t>;

// A letter is a frame generator (0-based index) or "multiply by a function".
using Letter = std::variant<int, Poly>;

// prefix * letters[0] * letters[1] * ...
struct FreeWord {
  Poly prefix{Rational(1)};
  std::vector<Letter> letters;
};

class UEAElement {
 public:
  explicit UEAElement(AlgebroidRef A);

  const AlgebroidRef& algebroid() const { return alg_; }
  const std::map<MultiIndex, Poly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long order() const;  // max |alpha|, -1 when zero

  void add_term(const MultiIndex& alpha, const Poly& coeff);
  Poly coeff(const MultiIndex& alpha) const;

  UEAElement operator-() const;
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }

  // Left multiplication by a base function: scales every coefficient.
  UEAElement scaled_left(const Poly& f) const;

  friend bool operator==(const UEAElement& a, const UEAElement& b);

  std::string str() const;

 private:
  AlgebroidRef alg_;
  std::map<MultiIndex, Poly> terms_;
};

// Chooses which redex to contract next, given how many are available;
// the default (empty function) always takes the leftmost. Alternative
// strategies exist for the confluence suite.
using RewriteChoice = std::function<std::size_t(std::size_t)>;

// Reduces a word (or a sum of words) to the ordered basis. With lift_t set,
// the algebroid must not carry t yet; the word is then reduced over
// adiabatic(*A) and the result lives there.
UEAElement normal_form(const FreeWord& w, AlgebroidRef A, bool lift_t = false,
                       const RewriteChoice& pick = {});
UEAElement normal_form(const std::vector<FreeWord>& ws, AlgebroidRef A, bool lift_t = false,
                       const RewriteChoice& pick = {});

// Multiplication by concatenation followed by normal ordering.
UEAElement multiply(const UEAElement& a, const UEAElement& b);

UEAElement inject_function(AlgebroidRef A, const Poly& f);
UEAElement inject_section(AlgebroidRef A, const Section& X);

// Words from parsed text (see expr.hpp); generator indices are validated
// against the rank, named variables against the base universe.
std::vector<FreeWord> words_from_terms(AlgebroidRef A, const std::vector<ParsedTerm>& terms);

// Full symmetrization: a fiber monomial h(x) xi^alpha maps to h times the
// average of all arrangements of the letters of e^alpha. Unitriangular with
// respect to order, hence invertible.
UEAElement quantize(AlgebroidRef A, const Poly& fiber_poly);

// The inverse of quantize, by back substitution from the top order down.
Poly symbol(const UEAElement& a);

// The order-m part as a fiber polynomial; order(a) must be at most m.
Poly principal_symbol(const UEAElement& a, long m);

// Deformed product of fiber polynomials: quantize both factors over the
// adiabatic algebroid, multiply, take the symbol. Exact in t; the t^0 part
// is the pointwise product and the antisymmetrized t^1 part is the Poisson
// bracket. A must not carry t itself.
Poly star(AlgebroidRef A, const Poly& f, const Poly& g);

// The algebra acting on base functions through the anchor:
// (f e^alpha) h = f * rho(e_1)^a1 ( ... rho(e_n)^an (h) ... ).
Poly anchor_act(const UEAElement& a, const Poly& h);

std::ostream& operator<<(std::ostream& os, const UEAElement& a);

}  // namespace algq
