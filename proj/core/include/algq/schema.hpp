#pragma once

// JSON readers and writers for algebroids, groupoids, kernels, bundles and
// sections. Malformed input throws value_error; semantic axiom violations
// are left to the checkers.

#include "algq/algebroid.hpp"
#include "algq/groupoid.hpp"
#include "algq/kernels.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace algq {

// { "base_dim": k, "rank": n, "anchor": [[poly,...],...],
//   "structure": [{"i":1,"j":2,"k":3,"c":poly},...], "with_t": bool }
// anchor and structure may be omitted (all zero); entries with i >= j are
// rejected; with_t defaults to false and admits t in the entries.
Algebroid load_algebroid(std::istream& in);
Algebroid load_algebroid_file(const std::string& path);
void save_algebroid(const Algebroid& A, std::ostream& out);

// { "units": [...], "arrows": [{"id":..,"d":..,"r":..},...],
//   "mul": [[g,h,gh],...], "inv": {g: g'}, "unit_arrows": {x: g} }
FiniteGroupoid load_groupoid(std::istream& in);
FiniteGroupoid load_groupoid_file(const std::string& path);
void save_groupoid(const FiniteGroupoid& G, std::ostream& out);

// Flat map { arrow-id: [[rational,...],...] }. Missing arrows are zero;
// fiber dimensions are inferred from the shapes (unconstrained ones are 1).
ReducedKernel load_kernel(std::istream& in, GroupoidRef G);
ReducedKernel load_kernel_file(const std::string& path, GroupoidRef G);
void save_kernel(const ReducedKernel& k, std::ostream& out);

// Same flat map, but every arrow must be present.
EquivariantBundle load_bundle(std::istream& in, GroupoidRef G);
EquivariantBundle load_bundle_file(const std::string& path, GroupoidRef G);
void save_bundle(const EquivariantBundle& V, std::ostream& out);

// { unit-id: [rational,...] } with one column entry per unit.
std::vector<RatMatrix> load_phi(std::istream& in, const FiniteGroupoid& G);
std::vector<RatMatrix> load_phi_file(const std::string& path, const FiniteGroupoid& G);
void save_phi(const std::vector<RatMatrix>& phi, const FiniteGroupoid& G, std::ostream& out);

}  // namespace algq
