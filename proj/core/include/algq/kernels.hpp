#pragma once

// Convolution algebra of matrix-valued kernels on a finite groupoid, the
// equivalent description as families of per-unit matrices invariant under
// right translation, and representations on equivariant bundles.

#include "algq/groupoid.hpp"
#include "algq/rat_matrix.hpp"

#include <string>
#include <vector>

namespace algq {

// A function on the arrows; the value at g is a dim(r(g)) x dim(d(g)) matrix,
// thought of as a map between the fibers at d(g) and r(g). The fiber
// dimension assignment is per unit; the scalar case is dims all 1.
class ReducedKernel {
 public:
  ReducedKernel(GroupoidRef G, std::vector<int> dims);
  static ReducedKernel scalar(GroupoidRef G);

  // identity matrix at each unit arrow, zero elsewhere; the convolution unit
  static ReducedKernel delta(GroupoidRef G, std::vector<int> dims);

  const GroupoidRef& groupoid() const { return G_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int x) const { return dims_.at(x); }

  const RatMatrix& at(int g) const { return values_.at(g); }
  void set(int g, RatMatrix m);
  void set(const std::string& arrow_id, const Rational& v);  // scalar fibers

  std::vector<int> support() const;  // arrows with nonzero value

  ReducedKernel& operator+=(const ReducedKernel& o);
  ReducedKernel& operator-=(const ReducedKernel& o);
  ReducedKernel& operator*=(const Rational& c);
  friend ReducedKernel operator+(ReducedKernel a, const ReducedKernel& b) { return a += b; }
  friend ReducedKernel operator-(ReducedKernel a, const ReducedKernel& b) { return a -= b; }
  friend ReducedKernel operator*(const Rational& c, ReducedKernel a) { return a *= c; }

  friend bool operator==(const ReducedKernel& a, const ReducedKernel& b);

 private:
  GroupoidRef G_;
  std::vector<int> dims_;
  std::vector<RatMatrix> values_;  // indexed by arrow
};

// (f1*f2)(g) = sum of f1(h1)f2(h2) over factorizations h1 h2 = g
ReducedKernel convolve(const ReducedKernel& f1, const ReducedKernel& f2);

// Per-unit matrices indexed by pairs of arrows with source x; the block at
// (h', h) maps the fiber at r(h) to the fiber at r(h'). The interesting ones
// are invariant under right translation by any arrow into x.
class InvariantFamily {
 public:
  InvariantFamily(GroupoidRef G, std::vector<int> dims);
  static InvariantFamily identity(GroupoidRef G, std::vector<int> dims);

  const GroupoidRef& groupoid() const { return G_; }
  const std::vector<int>& dims() const { return dims_; }

  // h' and h are arrow indices with a common source
  const RatMatrix& block(int hprime, int h) const;
  void set_block(int hprime, int h, RatMatrix m);

  friend bool operator==(const InvariantFamily& a, const InvariantFamily& b);

 private:
  friend InvariantFamily compose_families(const InvariantFamily&, const InvariantFamily&);
  std::size_t slot(int hprime, int h) const;
  GroupoidRef G_;
  std::vector<int> dims_;
  std::vector<int> pos_;                        // arrow -> position within its source's list
  std::vector<std::vector<RatMatrix>> blocks_;  // per unit, |G_x| x |G_x| row-major
};

// Witness strings for failures of k_{r(g)}(h',h) = k_{d(g)}(h'g, hg).
std::vector<std::string> invariance_errors(const InvariantFamily& P);

// k(g) = P_{d(g)}(g, u(d(g))). Requires the invariance relation; throws with
// a witness if it fails.
ReducedKernel kernel_from_family(const InvariantFamily& P);

// P_x(h', h) = k(h' h^{-1}); always invariant, inverse to kernel_from_family.
InvariantFamily family_from_kernel(const ReducedKernel& k);

// per-unit matrix product; (PQ)_x(h'', h) = sum over h' of P_x(h'',h')Q_x(h',h)
InvariantFamily compose_families(const InvariantFamily& P, const InvariantFamily& Q);

struct EquivariantBundle {
  GroupoidRef G;
  std::vector<int> dims;        // fiber dimension per unit
  std::vector<RatMatrix> rho;   // per arrow, dim(r(g)) x dim(d(g))
};

// Functoriality witnesses: rho(u(x)) = id and rho(gh) = rho(g)rho(h).
std::vector<std::string> check_equivariant(const EquivariantBundle& V);

EquivariantBundle trivial_bundle(GroupoidRef G);

// rho(g) = lambda(r(g)) * lambda(d(g))^{-1} for invertible per-unit matrices;
// functorial by construction and nontrivial whenever lambda varies.
EquivariantBundle coboundary_bundle(GroupoidRef G, const std::vector<RatMatrix>& lambda);

// (pi(f)phi)(x) = sum over h with d(h) = x of f(h^{-1}) rho(h^{-1}) phi(r(h)).
// phi assigns a dim(x)-column to each unit. Scalar kernel values multiply
// through; matrix values must match the bundle shapes.
std::vector<RatMatrix> represent(const ReducedKernel& f, const EquivariantBundle& V,
                                 const std::vector<RatMatrix>& phi);

}  // namespace algq
