#include "algq/algebroid.hpp"

#include "doctest.h"
#include "support/gen.hpp"

using namespace algq;

namespace {

Algebroid tangent_line() {
  Algebroid A(1, 1);
  A.set_anchor(1, 1, Poly(1));
  return A;
}

Algebroid scaling_line() {
  Algebroid A(1, 1);
  A.set_anchor(1, 1, Poly::variable("x1"));
  return A;
}

Algebroid tangent_plane() {
  Algebroid A(2, 2);
  A.set_anchor(1, 1, Poly(1));
  A.set_anchor(2, 2, Poly(1));
  return A;
}

Algebroid so3() {
  Algebroid A(0, 3);
  A.set_bracket(1, 2, 3, Poly(1));
  A.set_bracket(2, 3, 1, Poly(1));
  A.set_bracket(1, 3, 2, Poly(-1));
  return A;
}

Algebroid heisenberg() {
  Algebroid A(0, 3);
  A.set_bracket(1, 2, 3, Poly(1));
  return A;
}

Algebroid nonabelian2() {
  Algebroid A(0, 2);
  A.set_bracket(1, 2, 1, Poly(1));
  return A;
}

std::vector<std::string> phase_vars(const Algebroid& A) {
  std::vector<std::string> v;
  for (int a = 1; a <= A.base_dim(); ++a) v.push_back(A.base_var(a));
  for (int i = 1; i <= A.rank(); ++i) v.push_back(A.fiber_var(i));
  if (A.has_t()) v.push_back("t");
  return v;
}

Poly v(const char* name) { return Poly::variable(name); }

// random fiberwise-linear polynomial sum_i c_i(x) xi_i
Poly random_linear(testgen::Rng& rng, const Algebroid& A) {
  std::vector<std::string> base;
  for (int a = 1; a <= A.base_dim(); ++a) base.push_back(A.base_var(a));
  Poly p;
  for (int i = 1; i <= A.rank(); ++i)
    p += testgen::poly(rng, base, 2, 2) * v(A.fiber_var(i).c_str());
  return p;
}

}  // namespace

TEST_CASE("tangent line: brackets and canonical relations") {
  Algebroid A = tangent_line();
  CHECK(check_axioms(A).ok());

  // [e, x e] = e
  Section X = basis_section(A, 1);
  Section Y = fiber_to_section(A, v("x1") * v("xi1"));
  CHECK(section_to_fiber(A, bracket(A, X, Y)) == v("xi1"));

  CHECK(poisson(A, v("xi1"), v("x1")) == Poly(1));
  CHECK(poisson(A, v("xi1"), v("x1") * v("x1")) == Poly(2) * v("x1"));
  CHECK(poisson(A, v("x1"), v("x1")) == Poly{});
  CHECK(poisson(A, v("xi1"), v("xi1")) == Poly{});
}

TEST_CASE("axiom checker passes the classical fixtures") {
  for (const Algebroid& A :
       {tangent_line(), tangent_plane(), scaling_line(), so3(), heisenberg(), nonabelian2()}) {
    auto rep = check_axioms(A);
    CHECK(rep.ok());
  }
}

TEST_CASE("planted antisymmetry defect is caught at the right slot") {
  Algebroid A(0, 2);
  A.set_structure_raw(1, 2, 1, Poly(1));
  A.set_structure_raw(2, 1, 1, Poly(1));  // should be -1
  auto rep = check_axioms(A);
  CHECK_FALSE(rep.ok());
  std::vector<std::array<int, 3>> want{{{1, 2, 1}}};
  CHECK(rep.antisymmetry == want);
  CHECK(rep.anchor_ok());
  CHECK(rep.jacobi_ok());
}

TEST_CASE("planted anchor defect is caught at the right pair") {
  Algebroid A(1, 2);
  A.set_anchor(1, 1, Poly(1));
  A.set_anchor(2, 1, v("x1"));
  // zero bracket, but [rho(e1), rho(e2)] = d/dx1 != 0
  auto rep = check_axioms(A);
  CHECK_FALSE(rep.ok());
  std::vector<std::array<int, 2>> want{{{1, 2}}};
  CHECK(rep.anchor == want);
  CHECK(rep.antisymmetry_ok());
  CHECK(rep.jacobi_ok());
}

TEST_CASE("planted jacobi defect is caught at the right triple") {
  Algebroid A = so3();
  // re-point [e3,e1] from e2 to e1
  A.set_structure_raw(1, 3, 2, Poly{});
  A.set_structure_raw(3, 1, 2, Poly{});
  A.set_structure_raw(1, 3, 1, Poly(-1));
  A.set_structure_raw(3, 1, 1, Poly(1));
  auto rep = check_axioms(A);
  CHECK_FALSE(rep.ok());
  std::vector<std::array<int, 3>> want{{{1, 2, 3}}};
  CHECK(rep.jacobi == want);
  CHECK(rep.antisymmetry_ok());
  CHECK(rep.anchor_ok());
}

TEST_CASE("poisson is an antisymmetric biderivation satisfying Jacobi") {
  testgen::Rng rng(2024);
  for (const Algebroid& A : {tangent_line(), scaling_line(), tangent_plane(), so3(),
                             heisenberg(), nonabelian2(), adiabatic(so3())}) {
    auto vars = phase_vars(A);
    for (int trial = 0; trial < 60; ++trial) {
      Poly f = testgen::poly(rng, vars, 3, 3);
      Poly g = testgen::poly(rng, vars, 3, 3);
      Poly h = testgen::poly(rng, vars, 3, 3);
      CHECK(poisson(A, f, g) == -poisson(A, g, f));
      CHECK(poisson(A, f, g * h) == poisson(A, f, g) * h + g * poisson(A, f, h));
      Poly jac = poisson(A, f, poisson(A, g, h)) + poisson(A, g, poisson(A, h, f)) +
                 poisson(A, h, poisson(A, f, g));
      CHECK(jac == Poly{});
    }
  }
}

TEST_CASE("degree-one poisson agrees with the section bracket") {
  testgen::Rng rng(77);
  for (const Algebroid& A :
       {tangent_line(), scaling_line(), tangent_plane(), so3(), nonabelian2()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly X = random_linear(rng, A);
      Poly Y = random_linear(rng, A);
      Poly via_sections =
          section_to_fiber(A, bracket(A, fiber_to_section(A, X), fiber_to_section(A, Y)));
      CHECK(poisson(A, X, Y) == via_sections);
    }
  }
}

TEST_CASE("bracket satisfies the Leibniz rule in the second argument") {
  testgen::Rng rng(31);
  for (const Algebroid& A : {tangent_line(), scaling_line(), tangent_plane()}) {
    std::vector<std::string> base;
    for (int a = 1; a <= A.base_dim(); ++a) base.push_back(A.base_var(a));
    for (int trial = 0; trial < 30; ++trial) {
      Section X = fiber_to_section(A, random_linear(rng, A));
      Section Y = fiber_to_section(A, random_linear(rng, A));
      Poly f = testgen::poly(rng, base, 2, 3);

      Section fY = Y;
      for (auto& c : fY.comp) c = f * c;
      Section lhs = bracket(A, X, fY);

      Section rhs = bracket(A, X, Y);
      Poly Xf = anchor_apply(A, X, f);
      for (int i = 0; i < A.rank(); ++i) rhs.comp[i] = f * rhs.comp[i] + Xf * Y.comp[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("adiabatic scales anchor and bracket by t") {
  Algebroid At = adiabatic(so3());
  CHECK(At.has_t());
  CHECK(At.structure(1, 2, 3) == v("t"));
  CHECK(At.structure(2, 1, 3) == -v("t"));
  CHECK(check_axioms(At).ok());

  Algebroid Bt = adiabatic(scaling_line());
  CHECK(Bt.anchor(1, 1) == v("t") * v("x1"));
  CHECK(check_axioms(Bt).ok());

  CHECK_THROWS_AS(adiabatic(At), value_error);

  // t acts as a central coefficient for the scaled bracket
  CHECK(poisson(At, v("xi1"), v("xi2")) == v("t") * v("xi3"));
  CHECK(poisson(At, v("t"), v("xi2")) == Poly{});
}

TEST_CASE("fiber decomposition utilities") {
  Algebroid A = tangent_plane();
  Poly p = v("x1") * v("xi2") + Poly(3) * v("xi1");
  Section X = fiber_to_section(A, p);
  CHECK(X.comp[0] == Poly(3));
  CHECK(X.comp[1] == v("x1"));
  CHECK(section_to_fiber(A, X) == p);

  CHECK(fiber_degree(A, p) == 1);
  CHECK(fiber_degree(A, v("xi1") * v("xi1")) == 2);
  CHECK(fiber_degree(A, v("x1")) == 0);

  auto terms = fiber_terms(A, v("xi1") * v("xi1") + v("x2") * v("xi2"));
  CHECK(terms.size() == 2);
  CHECK(terms.at({2, 0}) == Poly(1));
  CHECK(terms.at({0, 1}) == v("x2"));

  // not fiberwise linear
  CHECK_THROWS_AS(fiber_to_section(A, v("xi1") * v("xi1")), value_error);
  CHECK_THROWS_AS(fiber_to_section(A, v("xi1") + Poly(1)), value_error);
}

TEST_CASE("variable universe is enforced") {
  Algebroid A(1, 2);
  CHECK_THROWS_AS(A.set_anchor(1, 1, v("xi1")), value_error);       // fiber var in anchor
  CHECK_THROWS_AS(A.set_anchor(1, 1, v("x2")), value_error);        // base var out of range
  CHECK_THROWS_AS(A.set_anchor(1, 1, v("t")), value_error);         // no t without adiabatic
  CHECK_THROWS_AS(A.set_bracket(2, 1, 1, Poly(1)), value_error);    // needs i < j
  CHECK_THROWS_AS(A.set_bracket(1, 2, 3, Poly(1)), value_error);    // k out of range
  CHECK_THROWS_AS(poisson(A, v("xi3"), v("x1")), value_error);      // fiber var out of range
  CHECK_THROWS_AS(poisson(A, v("u1"), v("x1")), value_error);       // foreign variable
  Algebroid P(0, 2);
  CHECK_THROWS_AS(P.set_anchor(1, 1, Poly(1)), value_error);        // no base directions
  CHECK_THROWS_AS(poisson(P, v("x1"), v("xi1")), value_error);
}

TEST_CASE("algebroids with equal tables compare equal") {
  CHECK(so3() == so3());
  CHECK_FALSE(so3() == heisenberg());
  Algebroid A = so3();
  Algebroid B = so3();
  B.set_structure_raw(1, 2, 3, Poly(1));  // same value, still equal
  CHECK(A == B);
}
