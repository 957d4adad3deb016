#include "algq/groupoid.hpp"

#include <set>

namespace algq {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw value_error(msg);
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> units,
                               std::vector<std::string> arrow_ids,
                               std::vector<std::pair<int, int>> arrow_ends,
                               std::map<std::pair<int, int>, int> mul,
                               std::vector<int> inverse,
                               std::vector<int> unit_arrows)
    : unit_ids_(std::move(units)),
      arrow_ids_(std::move(arrow_ids)),
      ends_(std::move(arrow_ends)),
      mul_(std::move(mul)),
      inv_(std::move(inverse)),
      unit_arrows_(std::move(unit_arrows)) {
  require(!unit_ids_.empty(), "groupoid needs at least one unit");
  require(ends_.size() == arrow_ids_.size(), "arrow_ends size mismatch");
  require(inv_.size() == arrow_ids_.size(), "inverse table size mismatch");
  require(unit_arrows_.size() == unit_ids_.size(), "unit_arrows size mismatch");

  const int nu = static_cast<int>(unit_ids_.size());
  const int na = static_cast<int>(arrow_ids_.size());
  auto unit_ok = [&](int x) { return 0 <= x && x < nu; };
  auto arrow_ok = [&](int g) { return 0 <= g && g < na; };

  for (int x = 0; x < nu; ++x) {
    require(!unit_lookup_.count(unit_ids_[x]), "duplicate unit id: " + unit_ids_[x]);
    unit_lookup_[unit_ids_[x]] = x;
  }
  for (int g = 0; g < na; ++g) {
    require(!arrow_lookup_.count(arrow_ids_[g]), "duplicate arrow id: " + arrow_ids_[g]);
    arrow_lookup_[arrow_ids_[g]] = g;
  }
  for (const auto& [dd, rr] : ends_)
    require(unit_ok(dd) && unit_ok(rr), "arrow endpoint out of range");
  for (const auto& [gh, p] : mul_)
    require(arrow_ok(gh.first) && arrow_ok(gh.second) && arrow_ok(p),
            "mul table index out of range");
  for (int g : inv_) require(arrow_ok(g), "inverse index out of range");
  for (int u : unit_arrows_) require(arrow_ok(u), "unit arrow index out of range");

  by_d_.assign(unit_ids_.size(), {});
  for (int g = 0; g < na; ++g) by_d_[d(g)].push_back(g);
}

int FiniteGroupoid::unit_index(const std::string& id) const {
  auto it = unit_lookup_.find(id);
  require(it != unit_lookup_.end(), "unknown unit id: " + id);
  return it->second;
}

int FiniteGroupoid::arrow_index(const std::string& id) const {
  auto it = arrow_lookup_.find(id);
  require(it != arrow_lookup_.end(), "unknown arrow id: " + id);
  return it->second;
}

std::optional<int> FiniteGroupoid::mul(int g, int h) const {
  auto it = mul_.find({g, h});
  if (it == mul_.end()) return std::nullopt;
  return it->second;
}

int FiniteGroupoid::mul_or_throw(int g, int h) const {
  auto p = mul(g, h);
  require(p.has_value(), "no product for (" + arrow_id(g) + ", " + arrow_id(h) + ")");
  return *p;
}

FiniteGroupoid FiniteGroupoid::from_tables(
    const std::vector<std::string>& units,
    const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>& arrows,
    const std::vector<std::array<std::string, 3>>& mul,
    const std::map<std::string, std::string>& inverse,
    const std::map<std::string, std::string>& unit_arrows) {
  std::map<std::string, int> uidx, aidx;
  for (std::size_t i = 0; i < units.size(); ++i) {
    require(!uidx.count(units[i]), "duplicate unit id: " + units[i]);
    uidx[units[i]] = static_cast<int>(i);
  }
  std::vector<std::string> ids;
  for (const auto& [id, dr] : arrows) {
    require(!aidx.count(id), "duplicate arrow id: " + id);
    aidx[id] = static_cast<int>(ids.size());
    ids.push_back(id);
  }
  auto u_of = [&](const std::string& id) {
    auto it = uidx.find(id);
    require(it != uidx.end(), "unknown unit id: " + id);
    return it->second;
  };
  auto a_of = [&](const std::string& id) {
    auto it = aidx.find(id);
    require(it != aidx.end(), "unknown arrow id: " + id);
    return it->second;
  };

  std::vector<std::pair<int, int>> ends;
  for (const auto& [id, dr] : arrows) ends.push_back({u_of(dr.first), u_of(dr.second)});

  std::map<std::pair<int, int>, int> m;
  for (const auto& t : mul) {
    auto key = std::make_pair(a_of(t[0]), a_of(t[1]));
    int val = a_of(t[2]);
    require(m.find(key) == m.end(), "repeated product entry for (" + t[0] + ", " + t[1] + ")");
    m[key] = val;
  }

  std::vector<int> inv(ids.size(), -1);
  for (const auto& [id, jd] : inverse) inv[a_of(id)] = a_of(jd);
  for (std::size_t g = 0; g < ids.size(); ++g)
    require(inv[g] >= 0, "missing inverse for arrow: " + ids[g]);

  std::vector<int> ua(units.size(), -1);
  for (const auto& [id, gd] : unit_arrows) ua[u_of(id)] = a_of(gd);
  for (std::size_t x = 0; x < units.size(); ++x)
    require(ua[x] >= 0, "missing unit arrow for unit: " + units[x]);

  return FiniteGroupoid(units, std::move(ids), std::move(ends), std::move(m), std::move(inv),
                        std::move(ua));
}

GroupoidReport check_groupoid(const FiniteGroupoid& G) {
  GroupoidReport rep;
  const int na = G.arrows();
  auto id = [&](int g) { return G.arrow_id(g); };

  for (int g = 0; g < na; ++g) {
    for (int h = 0; h < na; ++h) {
      bool comp = G.composable(g, h);
      bool have = G.mul(g, h).has_value();
      if (comp && !have)
        rep.domain.push_back("no product for composable pair (" + id(g) + ", " + id(h) + ")");
      if (!comp && have)
        rep.domain.push_back("product defined for non-composable pair (" + id(g) + ", " +
                             id(h) + ")");
      if (comp && have) {
        int p = *G.mul(g, h);
        if (G.r(p) != G.r(g) || G.d(p) != G.d(h))
          rep.ends.push_back("product " + id(p) + " of (" + id(g) + ", " + id(h) +
                             ") has wrong endpoints");
      }
    }
  }

  for (int g = 0; g < na; ++g) {
    for (int h = 0; h < na; ++h) {
      if (!G.composable(g, h)) continue;
      auto gh = G.mul(g, h);
      if (!gh) continue;
      for (int l = 0; l < na; ++l) {
        if (!G.composable(h, l)) continue;
        auto hl = G.mul(h, l);
        if (!hl) continue;
        auto left = G.mul(*gh, l);
        auto right = G.mul(g, *hl);
        if (!left || !right || *left != *right)
          rep.associativity.push_back("(" + id(g) + "*" + id(h) + ")*" + id(l) + " != " +
                                      id(g) + "*(" + id(h) + "*" + id(l) + ")");
      }
    }
  }

  std::map<int, int> unit_of;
  for (int x = 0; x < G.units(); ++x) {
    int u = G.unit_arrow(x);
    if (G.d(u) != x || G.r(u) != x)
      rep.units.push_back("unit arrow " + id(u) + " of " + G.unit_id(x) +
                          " has wrong endpoints");
    auto it = unit_of.find(u);
    if (it != unit_of.end())
      rep.units.push_back("units " + G.unit_id(it->second) + " and " + G.unit_id(x) +
                          " share unit arrow " + id(u));
    else
      unit_of[u] = x;
  }
  for (int g = 0; g < na; ++g) {
    auto left = G.mul(G.unit_arrow(G.r(g)), g);
    auto right = G.mul(g, G.unit_arrow(G.d(g)));
    if (!left || *left != g) rep.units.push_back("u(r(g))*g != g for g = " + id(g));
    if (!right || *right != g) rep.units.push_back("g*u(d(g)) != g for g = " + id(g));
  }

  for (int g = 0; g < na; ++g) {
    int gi = G.inverse(g);
    if (G.d(gi) != G.r(g) || G.r(gi) != G.d(g)) {
      rep.inverses.push_back("inverse " + id(gi) + " of " + id(g) + " has wrong endpoints");
      continue;
    }
    auto gr = G.mul(g, gi);
    auto gl = G.mul(gi, g);
    if (!gr || *gr != G.unit_arrow(G.r(g)))
      rep.inverses.push_back("g*inv(g) != u(r(g)) for g = " + id(g));
    if (!gl || *gl != G.unit_arrow(G.d(g)))
      rep.inverses.push_back("inv(g)*g != u(d(g)) for g = " + id(g));
  }

  return rep;
}

void FiniteGroup::validate() const {
  const int n = static_cast<int>(elements.size());
  require(n > 0, "group needs at least one element");
  {
    std::set<std::string> seen(elements.begin(), elements.end());
    require(static_cast<int>(seen.size()) == n, "duplicate group element name");
  }
  require(static_cast<int>(mul.size()) == n, "group mul table has wrong height");
  for (const auto& row : mul) {
    require(static_cast<int>(row.size()) == n, "group mul table has wrong width");
    for (int v : row) require(0 <= v && v < n, "group mul entry out of range");
  }
  require(static_cast<int>(inverse.size()) == n, "group inverse table has wrong size");
  for (int v : inverse) require(0 <= v && v < n, "group inverse entry out of range");

  for (int a = 0; a < n; ++a) {
    require(mul[0][a] == a && mul[a][0] == a, "element 0 is not an identity");
    require(mul[a][inverse[a]] == 0 && mul[inverse[a]][a] == 0,
            "inverse table is wrong for " + elements[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(mul[mul[a][b]][c] == mul[a][mul[b][c]], "group mul is not associative");
}

FiniteGroup cyclic_group(int n) {
  require(n >= 1, "cyclic group order must be positive");
  FiniteGroup G;
  for (int a = 0; a < n; ++a) G.elements.push_back("g" + std::to_string(a));
  G.mul.assign(n, std::vector<int>(n, 0));
  G.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) G.mul[a][b] = (a + b) % n;
    G.inverse[a] = (n - a) % n;
  }
  G.validate();
  return G;
}

FiniteGroupoid pair_groupoid(int n) {
  require(n >= 1, "pair groupoid needs at least one point");
  std::vector<std::string> units;
  for (int i = 1; i <= n; ++i) units.push_back(std::to_string(i));

  // arrow (i,j) runs from j to i, so kernels read like matrix entries
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> ends;
  auto aid = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      ids.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      ends.push_back({j - 1, i - 1});
    }

  std::map<std::pair<int, int>, int> mul;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l) mul[{aid(i, j), aid(j, l)}] = aid(i, l);

  std::vector<int> inv;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) inv.push_back(aid(j, i));

  std::vector<int> ua;
  for (int i = 1; i <= n; ++i) ua.push_back(aid(i, i));

  return FiniteGroupoid(std::move(units), std::move(ids), std::move(ends), std::move(mul),
                        std::move(inv), std::move(ua));
}

FiniteGroupoid group_groupoid(const FiniteGroup& G) {
  G.validate();
  const int n = static_cast<int>(G.elements.size());
  std::vector<std::pair<int, int>> ends(n, {0, 0});
  std::map<std::pair<int, int>, int> mul;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[{a, b}] = G.mul[a][b];
  return FiniteGroupoid({"pt"}, G.elements, std::move(ends), std::move(mul), G.inverse, {0});
}

FiniteGroupoid transformation_groupoid(const std::vector<std::string>& points,
                                       const FiniteGroup& group,
                                       const std::vector<std::vector<int>>& action) {
  group.validate();
  const int np = static_cast<int>(points.size());
  const int ng = static_cast<int>(group.elements.size());
  require(np >= 1, "transformation groupoid needs at least one point");
  require(static_cast<int>(action.size()) == np, "action table has wrong height");
  for (const auto& row : action) {
    require(static_cast<int>(row.size()) == ng, "action table has wrong width");
    for (int v : row) require(0 <= v && v < np, "action entry out of range");
  }
  for (int p = 0; p < np; ++p) {
    require(action[p][0] == p, "identity must act trivially");
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        require(action[action[p][a]][b] == action[p][group.mul[a][b]],
                "action is not compatible with the group product");
  }

  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> ends;
  auto aidx = [&](int p, int a) { return p * ng + a; };
  for (int p = 0; p < np; ++p)
    for (int a = 0; a < ng; ++a) {
      ids.push_back("(" + points[p] + "," + group.elements[a] + ")");
      ends.push_back({action[p][a], p});
    }

  std::map<std::pair<int, int>, int> mul;
  for (int p = 0; p < np; ++p)
    for (int a = 0; a < ng; ++a)
      for (int b = 0; b < ng; ++b)
        mul[{aidx(p, a), aidx(action[p][a], b)}] = aidx(p, group.mul[a][b]);

  std::vector<int> inv;
  std::vector<int> ua;
  for (int p = 0; p < np; ++p)
    for (int a = 0; a < ng; ++a) inv.push_back(aidx(action[p][a], group.inverse[a]));
  for (int p = 0; p < np; ++p) ua.push_back(aidx(p, 0));

  return FiniteGroupoid(points, std::move(ids), std::move(ends), std::move(mul), std::move(inv),
                        std::move(ua));
}

}  // namespace algq
