#include "doctest.h"

#include "algq/uea.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

#include <memory>
#include <random>

using namespace algq;

namespace {

Poly v(const std::string& name) { return Poly::variable(name); }

// d/dx on the line: rank 1, anchor 1
AlgebroidRef tangent_line() {
  auto A = std::make_shared<Algebroid>(1, 1);
  A->set_anchor(1, 1, Poly{1});
  return A;
}

// x d/dx on the line
AlgebroidRef scaling_line() {
  auto A = std::make_shared<Algebroid>(1, 1);
  A->set_anchor(1, 1, v("x1"));
  return A;
}

// so(3) over a point: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
AlgebroidRef so3() {
  auto A = std::make_shared<Algebroid>(0, 3);
  A->set_bracket(1, 2, 3, Poly{1});
  A->set_bracket(2, 3, 1, Poly{1});
  A->set_bracket(1, 3, 2, Poly{-1});
  return A;
}

// Heisenberg: [e1,e2]=e3 central
AlgebroidRef heis() {
  auto A = std::make_shared<Algebroid>(0, 3);
  A->set_bracket(1, 2, 3, Poly{1});
  return A;
}

// the nonabelian 2-dimensional algebra: [e1,e2]=e1
AlgebroidRef nonab2() {
  auto A = std::make_shared<Algebroid>(0, 2);
  A->set_bracket(1, 2, 1, Poly{1});
  return A;
}

AlgebroidRef tangent_plane() {
  auto A = std::make_shared<Algebroid>(2, 2);
  A->set_anchor(1, 1, Poly{1});
  A->set_anchor(2, 2, Poly{1});
  return A;
}

FreeWord word_of(std::initializer_list<Letter> ls, Poly pre = Poly{1}) {
  FreeWord w;
  w.prefix = std::move(pre);
  w.letters.assign(ls);
  return w;
}

UEAElement expect_terms(AlgebroidRef A,
                        std::initializer_list<std::pair<MultiIndex, Poly>> ts) {
  UEAElement e(A);
  for (const auto& [a, c] : ts) e.add_term(a, c);
  return e;
}

oracle::OWord to_oracle(const FreeWord& w) {
  oracle::OWord ow;
  for (const auto& l : w.letters) {
    if (std::holds_alternative<int>(l))
      ow.emplace_back(std::get<int>(l));
    else
      ow.emplace_back(std::get<Poly>(l));
  }
  return ow;
}

UEAElement from_oracle(AlgebroidRef A, const oracle::OElem& e) {
  UEAElement out(A);
  for (const auto& [gens, coeff] : e) {
    MultiIndex alpha(static_cast<std::size_t>(A->rank()), 0);
    for (int g : gens) alpha[static_cast<std::size_t>(g)] += 1;
    out.add_term(alpha, coeff);
  }
  return out;
}

FreeWord random_word(testgen::Rng& rng, const Algebroid& A, int len, int fn_deg = 2) {
  FreeWord w;
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> gen(0, A.rank() - 1);
  std::vector<std::string> base = A.base_vars();
  if (A.has_t()) base.push_back("t");
  for (int i = 0; i < len; ++i) {
    if (coin(rng) == 0)
      w.letters.emplace_back(testgen::nonzero_poly(rng, base, fn_deg, 2));
    else
      w.letters.emplace_back(gen(rng));
  }
  w.prefix = testgen::nonzero_poly(rng, base, 1, 2);
  return w;
}

RewriteChoice seeded_choice(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](std::size_t n) -> std::size_t {
    return (*rng)() % n;
  };
}

}  // namespace

TEST_CASE("normal form: frozen single-rule cases") {
  // moving a generator past a function picks up the anchor derivative
  auto L = tangent_line();
  auto nf = normal_form(word_of({Letter{0}, Letter{v("x1")}}), L);
  CHECK(nf == expect_terms(L, {{{1}, v("x1")}, {{0}, Poly{1}}}));

  auto S = scaling_line();
  auto nf2 = normal_form(word_of({Letter{0}, Letter{v("x1")}}), S);
  CHECK(nf2 == expect_terms(S, {{{1}, v("x1")}, {{0}, v("x1")}}));

  // swapping out-of-order generators picks up the bracket
  auto R = so3();
  auto nf3 = normal_form(word_of({Letter{1}, Letter{0}}), R);
  CHECK(nf3 == expect_terms(R, {{{1, 1, 0}, Poly{1}}, {{0, 0, 1}, Poly{-1}}}));
}

TEST_CASE("normal form: frozen so(3) cube word") {
  // e2 e1 e1 = e1^2 e2 - 2 e1 e3 - e2, derived by hand and pinned against
  // the exhaustive oracle below
  auto R = so3();
  FreeWord w = word_of({Letter{1}, Letter{0}, Letter{0}});
  UEAElement expected = expect_terms(R, {{{2, 1, 0}, Poly{1}},
                                         {{1, 0, 1}, Poly{-2}},
                                         {{0, 1, 0}, Poly{-1}}});
  CHECK(normal_form(w, R) == expected);

  oracle::OElem value;
  auto fps = oracle::all_order_normal_forms(*R, Poly{1}, to_oracle(w), &value);
  CHECK(fps.size() == 1);
  CHECK(from_oracle(R, value) == expected);
}

TEST_CASE("normal form agrees with the oracle on random words") {
  testgen::Rng rng(404);
  std::vector<AlgebroidRef> algs{tangent_line(), scaling_line(), so3(), heis(), nonab2(),
                                 tangent_plane(),
                                 std::make_shared<Algebroid>(adiabatic(*so3())),
                                 std::make_shared<Algebroid>(adiabatic(*scaling_line()))};
  for (const auto& A : algs) {
    for (int rep = 0; rep < 12; ++rep) {
      FreeWord w = random_word(rng, *A, 1 + static_cast<int>(rng() % 4));
      UEAElement got = normal_form(w, A);
      UEAElement viaOracle =
          from_oracle(A, oracle::normal_form_rightmost(*A, w.prefix, to_oracle(w)));
      CHECK(got == viaOracle);
      // every rewrite order reaches the same value
      oracle::OElem value;
      auto fps = oracle::all_order_normal_forms(*A, w.prefix, to_oracle(w), &value);
      CHECK(fps.size() == 1);
      CHECK(from_oracle(A, value) == got);
      // strategy hook: random redex choices agree with the default
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        CHECK(normal_form(w, A, false, seeded_choice(seed)) == got);
      }
    }
  }
}

TEST_CASE("multiply matches concatenated words and is associative") {
  testgen::Rng rng(405);
  for (const auto& A : {so3(), scaling_line(), nonab2()}) {
    for (int rep = 0; rep < 10; ++rep) {
      FreeWord wa = random_word(rng, *A, 2);
      FreeWord wb = random_word(rng, *A, 2);
      UEAElement a = normal_form(wa, A), b = normal_form(wb, A);
      FreeWord cat;
      cat.prefix = wa.prefix;
      cat.letters = wa.letters;
      cat.letters.emplace_back(wb.prefix);
      cat.letters.insert(cat.letters.end(), wb.letters.begin(), wb.letters.end());
      CHECK(multiply(a, b) == normal_form(cat, A));

      FreeWord wc = random_word(rng, *A, 2);
      UEAElement c = normal_form(wc, A);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a + b, c) == multiply(a, c) + multiply(b, c));
    }
  }
}

TEST_CASE("multiply rejects mismatched algebroids") {
  auto A = so3();
  auto B = heis();
  CHECK_THROWS_AS(multiply(inject_function(A, Poly{1}), inject_function(B, Poly{1})),
                  value_error);
  // equal content on distinct instances is fine
  auto A2 = so3();
  CHECK(multiply(inject_function(A, Poly{2}), inject_function(A2, Poly{3})) ==
        inject_function(A, Poly{6}));
}

TEST_CASE("defining relations of the presentation") {
  testgen::Rng rng(406);
  for (const auto& A : {scaling_line(), tangent_plane()}) {
    std::vector<std::string> base = A->base_vars();
    for (int rep = 0; rep < 20; ++rep) {
      Section X{std::vector<Poly>(A->rank())}, Y{std::vector<Poly>(A->rank())};
      for (auto& cpt : X.comp) cpt = testgen::poly(rng, base, 2, 2);
      for (auto& cpt : Y.comp) cpt = testgen::poly(rng, base, 2, 2);
      Poly f = testgen::poly(rng, base, 3, 3);
      auto iX = inject_section(A, X), iY = inject_section(A, Y);
      auto iF = inject_function(A, f);
      // i(f) i(X-section pointwise product): i1(f) i2(X) = i2(fX)
      Section fX = X;
      for (auto& cpt : fX.comp) cpt = f * cpt;
      CHECK(multiply(iF, iX) == inject_section(A, fX));
      // [i2(X), i1(f)] = i1(rho(X) f)
      CHECK(multiply(iX, iF) - multiply(iF, iX) ==
            inject_function(A, anchor_apply(*A, X, f)));
      // [i2(X), i2(Y)] = i2([X,Y])
      CHECK(multiply(iX, iY) - multiply(iY, iX) ==
            inject_section(A, bracket(*A, X, Y)));
    }
  }
}

TEST_CASE("quantize: frozen so(3) case and unitriangularity") {
  auto R = so3();
  // q(xi1 xi2) = (e1 e2 + e2 e1)/2 = e1 e2 - e3/2
  UEAElement q = quantize(R, v("xi1") * v("xi2"));
  CHECK(q == expect_terms(R, {{{1, 1, 0}, Poly{1}}, {{0, 0, 1}, Poly{Rational(-1, 2)}}}));
  // q(xi1^2) = e1^2
  CHECK(quantize(R, v("xi1").pow(2)) == expect_terms(R, {{{2, 0, 0}, Poly{1}}}));
  // degree-one and degree-zero parts are untouched
  CHECK(quantize(R, v("xi2")) == expect_terms(R, {{{0, 1, 0}, Poly{1}}}));
  CHECK(quantize(R, Poly{5}) == inject_function(R, Poly{5}));
}

TEST_CASE("symbol inverts quantize in both directions") {
  testgen::Rng rng(407);
  std::vector<AlgebroidRef> algs{so3(), heis(), scaling_line(), tangent_plane(),
                                 std::make_shared<Algebroid>(adiabatic(*so3()))};
  for (const auto& A : algs) {
    std::vector<std::string> fiber = A->fiber_vars();
    std::vector<std::string> all = A->base_vars();
    for (const auto& xi : fiber) all.push_back(xi);
    if (A->has_t()) all.push_back("t");
    for (int rep = 0; rep < 15; ++rep) {
      Poly f = testgen::poly(rng, all, 4, 5);
      CHECK(symbol(quantize(A, f)) == f);

      UEAElement e(A);
      std::uniform_int_distribution<int> nt(1, 4);
      int terms = nt(rng);
      std::vector<std::string> base = A->base_vars();
      if (A->has_t()) base.push_back("t");
      for (int i = 0; i < terms; ++i) {
        MultiIndex alpha(static_cast<std::size_t>(A->rank()), 0);
        for (int d = 0; d < 3; ++d) alpha[rng() % alpha.size()] += rng() % 2;
        e.add_term(alpha, testgen::poly(rng, base, 2, 2));
      }
      CHECK(quantize(A, symbol(e)) == e);
    }
  }
}

TEST_CASE("principal symbol") {
  auto R = so3();
  UEAElement q = quantize(R, v("xi1") * v("xi2"));  // e1e2 - e3/2
  CHECK(principal_symbol(q, 2) == v("xi1") * v("xi2"));
  CHECK(principal_symbol(q, 3) == Poly{});
  CHECK_THROWS_AS(principal_symbol(q, 1), value_error);

  testgen::Rng rng(408);
  for (const auto& A : {so3(), scaling_line(), tangent_plane()}) {
    std::vector<std::string> all = A->base_vars();
    for (const auto& xi : A->fiber_vars()) all.push_back(xi);
    for (int rep = 0; rep < 25; ++rep) {
      Poly f = testgen::nonzero_poly(rng, all, 3, 3);
      Poly g = testgen::nonzero_poly(rng, all, 3, 3);
      UEAElement P = quantize(A, f), Q = quantize(A, g);
      long m = P.order(), mp = Q.order();
      // multiplicativity at top order
      CHECK(principal_symbol(multiply(P, Q), m + mp) ==
            principal_symbol(P, m) * principal_symbol(Q, mp));
      // the commutator drops one order and its top part is the Poisson bracket
      UEAElement comm = multiply(P, Q) - multiply(Q, P);
      CHECK(comm.order() <= m + mp - 1);
      CHECK(principal_symbol(comm, m + mp - 1) ==
            poisson(*A, principal_symbol(P, m), principal_symbol(Q, mp)));
    }
  }
}

TEST_CASE("star: frozen so(3) values") {
  auto R = so3();
  Poly s = star(R, v("xi1"), v("xi2"));
  CHECK(s == v("xi1") * v("xi2") + Rational(1, 2) * (v("t") * v("xi3")));
  CHECK(s.str() == "xi1*xi2 + (1/2)*t*xi3");
  // cyclic images
  CHECK(star(R, v("xi2"), v("xi3")) == v("xi2") * v("xi3") + Rational(1, 2) * (v("t") * v("xi1")));
  CHECK(star(R, v("xi3"), v("xi1")) == v("xi3") * v("xi1") + Rational(1, 2) * (v("t") * v("xi2")));
  // generators: f*g - g*f = t {f,g} with nothing at t^2
  Poly comm = star(R, v("xi1"), v("xi2")) - star(R, v("xi2"), v("xi1"));
  CHECK(comm == v("t") * v("xi3"));
}

TEST_CASE("star: deformation properties on random data") {
  testgen::Rng rng(409);
  for (const auto& A : {so3(), scaling_line(), nonab2()}) {
    std::vector<std::string> all = A->base_vars();
    for (const auto& xi : A->fiber_vars()) all.push_back(xi);
    for (int rep = 0; rep < 10; ++rep) {
      Poly f = testgen::poly(rng, all, 3, 3);
      Poly g = testgen::poly(rng, all, 3, 3);
      Poly s = star(A, f, g);
      // t = 0 recovers the commutative product
      CHECK(s.substitute({{"t", Poly{}}}) == f * g);
      // first order in t antisymmetrizes to the Poisson bracket
      Poly anti = s - star(A, g, f);
      Poly b1 = anti.partial("t").substitute({{"t", Poly{}}});
      CHECK(b1 == poisson(*A, f, g));
    }
  }
  CHECK_THROWS_AS(star(std::make_shared<Algebroid>(adiabatic(*so3())), v("xi1"), v("xi2")),
                  value_error);
}

TEST_CASE("anchor action is an algebra homomorphism") {
  testgen::Rng rng(410);
  for (const auto& A : {scaling_line(), tangent_plane()}) {
    std::vector<std::string> base = A->base_vars();
    std::vector<std::string> all = base;
    for (const auto& xi : A->fiber_vars()) all.push_back(xi);
    for (int rep = 0; rep < 15; ++rep) {
      UEAElement P = quantize(A, testgen::poly(rng, all, 3, 3));
      UEAElement Q = quantize(A, testgen::poly(rng, all, 3, 3));
      Poly h = testgen::poly(rng, base, 3, 3);
      CHECK(anchor_act(multiply(P, Q), h) == anchor_act(P, anchor_act(Q, h)));
      CHECK(anchor_act(P + Q, h) == anchor_act(P, h) + anchor_act(Q, h));
    }
  }
  // d/dx acting on polynomials
  auto L = tangent_line();
  CHECK(anchor_act(quantize(L, v("xi1")), v("x1").pow(3)) == Poly{3} * v("x1").pow(2));
}

TEST_CASE("adiabatic lift of a word") {
  auto R = so3();
  FreeWord w = word_of({Letter{1}, Letter{0}});
  UEAElement nf = normal_form(w, R, true);
  CHECK(nf.algebroid()->has_t());
  auto At = std::make_shared<Algebroid>(adiabatic(*R));
  CHECK(nf == expect_terms(At, {{{1, 1, 0}, Poly{1}}, {{0, 0, 1}, -v("t")}}));
  CHECK_THROWS_AS(normal_form(w, At, true), value_error);
}

TEST_CASE("element and word validation") {
  auto R = so3();
  CHECK_THROWS_AS(inject_function(R, v("x1")), value_error);     // no base variables
  CHECK_THROWS_AS(inject_function(R, v("xi1")), value_error);    // fiber vars not allowed
  CHECK_THROWS_AS(quantize(R, v("x1")), value_error);
  CHECK_THROWS_AS(quantize(R, v("t")), value_error);             // t needs the adiabatic algebroid
  auto words = parse_terms("e1*e4", true);
  CHECK_THROWS_AS(words_from_terms(R, words), value_error);      // rank is 3
  CHECK_THROWS_AS(words_from_terms(R, parse_terms("xi1*e1", true)), value_error);
  UEAElement e(R);
  CHECK_THROWS_AS(e.add_term({1, 0}, Poly{1}), value_error);     // wrong multi-index length
}

TEST_CASE("printing") {
  auto T = tangent_line();
  UEAElement a(T);
  a.add_term({2}, v("x1"));
  a.add_term({0}, Poly{Rational(-1, 2)});
  CHECK(a.str() == "(x1)·e1^2 + (-1/2)");

  auto M = std::make_shared<Algebroid>(1, 3);
  UEAElement b(M);
  b.add_term({1, 1, 0}, v("x1"));
  b.add_term({0, 0, 1}, Poly{Rational(-1, 2)});
  CHECK(b.str() == "(x1)·e1·e2 + (-1/2)·e3");
  CHECK(UEAElement(M).str() == "0");
  UEAElement unit(M);
  unit.add_term({0, 0, 0}, Poly{1});
  CHECK(unit.str() == "(1)");
  UEAElement mono(M);
  mono.add_term({0, 2, 1}, Poly{1});
  CHECK(mono.str() == "e2^2·e3");
  // descending order, ties broken by reverse lexicographic multi-index
  UEAElement mix(M);
  mix.add_term({2, 0, 0}, Poly{1});
  mix.add_term({1, 1, 0}, Poly{1});
  mix.add_term({0, 0, 1}, Poly{1});
  CHECK(mix.str() == "e1^2 + e1·e2 + e3");
}
