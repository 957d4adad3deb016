#pragma once

// Lie algebroids in coordinates: a base dimension k, a frame e1..en of the
// rank-n bundle, an anchor matrix of polynomials rho[i][a](x), and structure
// functions c[i][j][k](x) with [e_i, e_j] = sum_k c[i][j][k] e_k.
//
// Base coordinates are the variables x1..xk, fiber coordinates on the dual
// are xi1..xin, and adiabatic variants additionally carry the central
// deformation variable t.

#include "algq/poly.hpp"

#include <array>
#include <memory>
#include <vector>

namespace algq {

class Algebroid {
 public:
  Algebroid(int base_dim, int rank, bool with_t = false);

  int base_dim() const { return k_; }
  int rank() const { return n_; }
  bool has_t() const { return with_t_; }

  // Indices are 1-based, matching e1..en and x1..xk.
  void set_anchor(int i, int a, const Poly& rho);
  // Requires i < j; records c[i][j][k] and c[j][i][k] = -c[i][j][k].
  void set_bracket(int i, int j, int k, const Poly& c);
  // Writes a single slot without the antisymmetric mirror. Exists so the
  // axiom checker can be pointed at malformed data; not used by loaders.
  void set_structure_raw(int i, int j, int k, const Poly& c);

  const Poly& anchor(int i, int a) const;
  const Poly& structure(int i, int j, int k) const;

  std::string base_var(int a) const;   // "x<a>"
  std::string fiber_var(int i) const;  // "xi<i>"
  std::vector<std::string> base_vars() const;
  std::vector<std::string> fiber_vars() const;

  // True when the variable may appear in a function on the base (resp. on
  // the dual bundle) over this algebroid.
  bool allows_base(const std::string& var) const;
  bool allows_fiber(const std::string& var) const;
  void require_base_poly(const Poly& p, const std::string& what) const;
  void require_fiber_poly(const Poly& p, const std::string& what) const;

  friend bool operator==(const Algebroid&, const Algebroid&) = default;

 private:
  int k_ = 0;
  int n_ = 0;
  bool with_t_ = false;
  std::vector<Poly> anchor_;     // n*k, row major
  std::vector<Poly> structure_;  // n*n*n

  std::size_t aidx(int i, int a) const;
  std::size_t sidx(int i, int j, int k) const;
};

using AlgebroidRef = std::shared_ptr<const Algebroid>;

// A section written in the frame: X = sum_i comp[i] * e_i with comp[i] a
// function on the base.
struct Section {
  std::vector<Poly> comp;

  friend bool operator==(const Section&, const Section&) = default;
};

Section zero_section(const Algebroid& A);
Section basis_section(const Algebroid& A, int i);

struct AxiomReport {
  // 1-based witnesses: (i,j,k) with c[i][j][k] != -c[j][i][k]
  std::vector<std::array<int, 3>> antisymmetry;
  // (i,j) with rho([e_i,e_j]) != [rho(e_i), rho(e_j)]
  std::vector<std::array<int, 2>> anchor;
  // (i,j,l) with [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] != 0
  std::vector<std::array<int, 3>> jacobi;

  bool antisymmetry_ok() const { return antisymmetry.empty(); }
  bool anchor_ok() const { return anchor.empty(); }
  bool jacobi_ok() const { return jacobi.empty(); }
  bool ok() const { return antisymmetry_ok() && anchor_ok() && jacobi_ok(); }
};

// Exhaustive check of antisymmetry, the anchor morphism property, and the
// Jacobi identity on frame sections. Reports witnesses, never throws.
AxiomReport check_axioms(const Algebroid& A);

// rho(e_i) f, the anchor vector field applied to a base function. Only the
// x-variables are differentiated; t passes through.
Poly anchor_apply(const Algebroid& A, int i, const Poly& f);
Poly anchor_apply(const Algebroid& A, const Section& X, const Poly& f);

// [X,Y]^k = sum_{i,j} X^i Y^j c[i][j][k]
//         + sum_i X^i rho(e_i)(Y^k) - sum_j Y^j rho(e_j)(X^k)
Section bracket(const Algebroid& A, const Section& X, const Section& Y);

// The fiberwise-linear Poisson bracket on the dual bundle, determined by
// {xi_i, xi_j} = sum_k c[i][j][k] xi_k, {xi_i, h(x)} = rho(e_i) h, and
// {h, h'} = 0, extended as a biderivation; t is central.
Poly poisson(const Algebroid& A, const Poly& f, const Poly& g);

// Same base and frame, anchor and structure scaled by t. Fails if A already
// carries t.
Algebroid adiabatic(const Algebroid& A);

// Degree-one fiber polynomials are sections of the bundle: X <-> sum X^i xi_i.
Poly section_to_fiber(const Algebroid& A, const Section& X);
Section fiber_to_section(const Algebroid& A, const Poly& p);

// Regroups a fiber polynomial by xi-monomial; keys have length rank().
std::map<Exponents, Poly> fiber_terms(const Algebroid& A, const Poly& p);
// Largest total xi-degree, -1 on the zero polynomial.
long fiber_degree(const Algebroid& A, const Poly& p);

}  // namespace algq
