#include "algq/catalog.hpp"

namespace algq {

namespace {

AlgebroidRef tangent_line() {
  auto A = std::make_shared<Algebroid>(1, 1);
  A->set_anchor(1, 1, Poly(1));
  return A;
}

AlgebroidRef tangent_plane() {
  auto A = std::make_shared<Algebroid>(2, 2);
  A->set_anchor(1, 1, Poly(1));
  A->set_anchor(2, 2, Poly(1));
  return A;
}

AlgebroidRef so3() {
  auto A = std::make_shared<Algebroid>(0, 3);
  A->set_bracket(1, 2, 3, Poly(1));
  A->set_bracket(2, 3, 1, Poly(1));
  A->set_bracket(1, 3, 2, Poly(-1));
  return A;
}

AlgebroidRef heisenberg() {
  auto A = std::make_shared<Algebroid>(0, 3);
  A->set_bracket(1, 2, 3, Poly(1));
  return A;
}

AlgebroidRef nonabelian2() {
  auto A = std::make_shared<Algebroid>(0, 2);
  A->set_bracket(1, 2, 1, Poly(1));
  return A;
}

AlgebroidRef scaling_line() {
  auto A = std::make_shared<Algebroid>(1, 1);
  A->set_anchor(1, 1, Poly::variable("x1"));
  return A;
}

GroupoidRef z3_on_6() {
  // two free orbits of the rotation action
  std::vector<std::string> points = {"a0", "a1", "a2", "b0", "b1", "b2"};
  FiniteGroup g3 = cyclic_group(3);
  std::vector<std::vector<int>> action(6, std::vector<int>(3, 0));
  for (int p = 0; p < 6; ++p)
    for (int a = 0; a < 3; ++a) action[p][a] = (p / 3) * 3 + (p % 3 + a) % 3;
  return std::make_shared<FiniteGroupoid>(transformation_groupoid(points, g3, action));
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add_algebroid = [&](const std::string& name, const std::string& summary,
                           const AlgebroidRef& A) {
    out.push_back({name, "algebroid", summary, A, nullptr});
    out.push_back({name + "-adiabatic", "algebroid", summary + ", scaled by t",
                   std::make_shared<Algebroid>(adiabatic(*A)), nullptr});
  };
  auto add_groupoid = [&](const std::string& name, const std::string& summary,
                          FiniteGroupoid G) {
    out.push_back({name, "finite-groupoid", summary, nullptr,
                   std::make_shared<FiniteGroupoid>(std::move(G))});
  };

  add_algebroid("tangent-r1", "tangent algebroid of the line", tangent_line());
  add_algebroid("tangent-r2", "tangent algebroid of the plane", tangent_plane());
  add_algebroid("so3", "so(3) over a point", so3());
  add_algebroid("heisenberg", "Heisenberg algebra h3 over a point", heisenberg());
  add_algebroid("nonabelian2", "nonabelian 2-dim Lie algebra over a point", nonabelian2());
  add_algebroid("scaling-line", "span of x d/dx on the line", scaling_line());

  add_groupoid("pair3", "pair groupoid on 3 points", pair_groupoid(3));
  add_groupoid("pair4", "pair groupoid on 4 points", pair_groupoid(4));
  add_groupoid("pair5", "pair groupoid on 5 points", pair_groupoid(5));
  add_groupoid("pair6", "pair groupoid on 6 points", pair_groupoid(6));
  add_groupoid("z3", "cyclic group Z/3 with one unit", group_groupoid(cyclic_group(3)));
  add_groupoid("z4", "cyclic group Z/4 with one unit", group_groupoid(cyclic_group(4)));
  out.push_back({"z3-on-6", "finite-groupoid", "Z/3 acting freely on 6 points", nullptr,
                 z3_on_6()});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

AlgebroidRef catalog_algebroid(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name && e.algebroid) return e.algebroid;
  throw value_error("no catalog algebroid named " + name);
}

GroupoidRef catalog_groupoid(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name && e.groupoid) return e.groupoid;
  throw value_error("no catalog groupoid named " + name);
}

}  // namespace algq
