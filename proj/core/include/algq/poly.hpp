#pragma once

// Multivariate polynomials with exact rational coefficients.
//
// A Poly stores a sparse map from exponent vectors to coefficients. The
// variable list is part of the value and is kept canonical: variables are
// sorted (x1 < x2 < ... < xi1 < xi2 < ... < t < everything else), every
// listed variable occurs in at least one term, and no zero coefficients are
// stored. Equal polynomials therefore have identical representations.

#include "algq/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace algq {

using Exponents = std::vector<std::uint32_t>;

// 0 = base coordinates x<n>, 1 = fiber coordinates xi<n>, 2 = the central
// deformation variable t, 3 = anything else.
int var_class(const std::string& name);
bool var_name_valid(const std::string& name);
bool var_less(const std::string& a, const std::string& b);

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}
  static Poly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool mentions(const std::string& name) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(std::uint32_t k) const;

  long total_degree() const;                    // -1 on the zero polynomial
  long degree(const std::string& name) const;   // -1 on the zero polynomial

  // Coefficient of an exact monomial, given as name -> exponent (omitted
  // names mean exponent zero).
  Rational coeff(const std::map<std::string, std::uint32_t>& monomial) const;

  // d/d name. The name must be well formed; a variable the polynomial does
  // not mention gives 0.
  Poly partial(const std::string& name) const;

  // Simultaneous substitution; variables without a binding are left alone.
  Poly substitute(const std::map<std::string, Poly>& bindings) const;

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
  void normalize();
};

// Regroups p as a polynomial in the given variables: each key lists the
// exponents of group_vars (in the order given), the value collects what
// multiplies that monomial. Keys with a zero value never appear.
std::map<Exponents, Poly> split_by(const Poly& p, const std::vector<std::string>& group_vars);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace algq
