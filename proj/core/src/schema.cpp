#include "algq/schema.hpp"

#include "algq/expr.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace algq {

namespace {

using nlohmann::json;

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw value_error(std::string("bad JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw value_error(std::string("missing field: ") + name);
  return *it;
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw value_error(std::string(name) + " must be an integer");
  return v.get<int>();
}

std::string string_of(const json& v, const char* what) {
  if (!v.is_string()) throw value_error(std::string(what) + " must be a string");
  return v.get<std::string>();
}

void reject_unknown_keys(const json& j, const std::set<std::string>& known) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) throw value_error("unknown field: " + it.key());
}

Rational rational_of(const json& v, const char* what) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw value_error(std::string(what) + " must be a rational string or integer");
}

RatMatrix matrix_of(const json& v, const char* what) {
  if (!v.is_array() || v.empty()) throw value_error(std::string(what) + " must be a nonempty array of rows");
  int rows = static_cast<int>(v.size());
  int cols = -1;
  std::vector<Rational> data;
  for (const auto& row : v) {
    if (!row.is_array() || row.empty())
      throw value_error(std::string(what) + " rows must be nonempty arrays");
    if (cols < 0)
      cols = static_cast<int>(row.size());
    else if (cols != static_cast<int>(row.size()))
      throw value_error(std::string(what) + " rows have uneven lengths");
    for (const auto& cell : row) data.push_back(rational_of(cell, what));
  }
  return RatMatrix(rows, cols, std::move(data));
}

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// arrow-id keyed map of matrices with per-unit dimensions inferred from the
// shapes; dims left at 0 are unconstrained
std::pair<std::vector<int>, std::vector<RatMatrix>> matrix_map_of(const json& j,
                                                                  const FiniteGroupoid& G) {
  if (!j.is_object()) throw value_error("expected an object keyed by arrow ids");
  std::vector<int> dims(G.units(), 0);
  std::vector<RatMatrix> values(G.arrows());
  auto meet = [&](int x, int d, const std::string& id) {
    if (dims[x] == 0)
      dims[x] = d;
    else if (dims[x] != d)
      throw value_error("inconsistent fiber dimension at unit " + G.unit_id(x) +
                        " implied by arrow " + id);
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    int g = G.arrow_index(it.key());
    RatMatrix m = matrix_of(it.value(), it.key().c_str());
    meet(G.r(g), m.rows(), it.key());
    meet(G.d(g), m.cols(), it.key());
    values[g] = std::move(m);
  }
  return {std::move(dims), std::move(values)};
}

std::ostream& dump(const json& j, std::ostream& out) { return out << j.dump(2) << "\n"; }

template <typename T, typename F>
T load_file(const std::string& path, F loader) {
  std::ifstream in(path);
  if (!in) throw value_error("cannot open " + path);
  return loader(in);
}

}  // namespace

Algebroid load_algebroid(std::istream& in) {
  json j = parse_stream(in);
  if (!j.is_object()) throw value_error("algebroid file must be a JSON object");
  reject_unknown_keys(j, {"base_dim", "rank", "anchor", "structure", "with_t"});
  int k = int_field(j, "base_dim");
  int n = int_field(j, "rank");
  bool with_t = false;
  if (j.count("with_t")) {
    if (!j["with_t"].is_boolean()) throw value_error("with_t must be a boolean");
    with_t = j["with_t"].get<bool>();
  }
  Algebroid A(k, n, with_t);

  if (j.count("anchor")) {
    const json& anchor = j["anchor"];
    if (!anchor.is_array() || static_cast<int>(anchor.size()) != n)
      throw value_error("anchor must have one row per generator");
    for (int i = 0; i < n; ++i) {
      const json& row = anchor[i];
      if (!row.is_array() || static_cast<int>(row.size()) != k)
        throw value_error("anchor rows must have one entry per base variable");
      for (int a = 0; a < k; ++a) {
        Poly p;
        try {
          p = parse_poly(string_of(row[a], "anchor entry"));
        } catch (const parse_error& e) {
          throw value_error(std::string("bad anchor entry: ") + e.what());
        }
        A.set_anchor(i + 1, a + 1, p);
      }
    }
  }

  if (j.count("structure")) {
    const json& st = j["structure"];
    if (!st.is_array()) throw value_error("structure must be an array");
    std::set<std::array<int, 3>> seen;
    for (const auto& entry : st) {
      if (!entry.is_object()) throw value_error("structure entries must be objects");
      reject_unknown_keys(entry, {"i", "j", "k", "c"});
      int i = int_field(entry, "i");
      int jj = int_field(entry, "j");
      int kk = int_field(entry, "k");
      if (i >= jj) throw value_error("structure entries need i < j");
      if (!seen.insert({i, jj, kk}).second)
        throw value_error("duplicate structure entry (" + std::to_string(i) + "," +
                          std::to_string(jj) + "," + std::to_string(kk) + ")");
      Poly c;
      try {
        c = parse_poly(string_of(field(entry, "c"), "structure entry"));
      } catch (const parse_error& e) {
        throw value_error(std::string("bad structure entry: ") + e.what());
      }
      A.set_bracket(i, jj, kk, c);
    }
  }
  return A;
}

Algebroid load_algebroid_file(const std::string& path) {
  return load_file<Algebroid>(path, [](std::istream& in) { return load_algebroid(in); });
}

void save_algebroid(const Algebroid& A, std::ostream& out) {
  json j;
  j["base_dim"] = A.base_dim();
  j["rank"] = A.rank();
  if (A.has_t()) j["with_t"] = true;
  json anchor = json::array();
  for (int i = 1; i <= A.rank(); ++i) {
    json row = json::array();
    for (int a = 1; a <= A.base_dim(); ++a) row.push_back(A.anchor(i, a).str());
    anchor.push_back(std::move(row));
  }
  j["anchor"] = std::move(anchor);
  json st = json::array();
  for (int i = 1; i <= A.rank(); ++i)
    for (int jj = i + 1; jj <= A.rank(); ++jj)
      for (int kk = 1; kk <= A.rank(); ++kk) {
        const Poly& c = A.structure(i, jj, kk);
        if (c == Poly{}) continue;
        json e;
        e["i"] = i;
        e["j"] = jj;
        e["k"] = kk;
        e["c"] = c.str();
        st.push_back(std::move(e));
      }
  j["structure"] = std::move(st);
  dump(j, out);
}

FiniteGroupoid load_groupoid(std::istream& in) {
  json j = parse_stream(in);
  if (!j.is_object()) throw value_error("groupoid file must be a JSON object");
  reject_unknown_keys(j, {"units", "arrows", "mul", "inv", "unit_arrows"});

  std::vector<std::string> units;
  for (const auto& u : field(j, "units")) units.push_back(string_of(u, "unit"));

  std::vector<std::pair<std::string, std::pair<std::string, std::string>>> arrows;
  for (const auto& a : field(j, "arrows")) {
    if (!a.is_object()) throw value_error("arrows entries must be objects");
    reject_unknown_keys(a, {"id", "d", "r"});
    arrows.push_back({string_of(field(a, "id"), "arrow id"),
                      {string_of(field(a, "d"), "arrow source"),
                       string_of(field(a, "r"), "arrow range")}});
  }

  std::vector<std::array<std::string, 3>> mul;
  for (const auto& t : field(j, "mul")) {
    if (!t.is_array() || t.size() != 3)
      throw value_error("mul entries must be [g, h, gh] triples");
    mul.push_back({string_of(t[0], "mul entry"), string_of(t[1], "mul entry"),
                   string_of(t[2], "mul entry")});
  }

  std::map<std::string, std::string> inv, unit_arrows;
  const json& ji = field(j, "inv");
  if (!ji.is_object()) throw value_error("inv must be an object");
  for (auto it = ji.begin(); it != ji.end(); ++it)
    inv[it.key()] = string_of(it.value(), "inv entry");
  const json& ju = field(j, "unit_arrows");
  if (!ju.is_object()) throw value_error("unit_arrows must be an object");
  for (auto it = ju.begin(); it != ju.end(); ++it)
    unit_arrows[it.key()] = string_of(it.value(), "unit_arrows entry");

  return FiniteGroupoid::from_tables(units, arrows, mul, inv, unit_arrows);
}

FiniteGroupoid load_groupoid_file(const std::string& path) {
  return load_file<FiniteGroupoid>(path, [](std::istream& in) { return load_groupoid(in); });
}

void save_groupoid(const FiniteGroupoid& G, std::ostream& out) {
  json j;
  j["units"] = json::array();
  for (int x = 0; x < G.units(); ++x) j["units"].push_back(G.unit_id(x));
  json arrows = json::array();
  for (int g = 0; g < G.arrows(); ++g) {
    json a;
    a["id"] = G.arrow_id(g);
    a["d"] = G.unit_id(G.d(g));
    a["r"] = G.unit_id(G.r(g));
    arrows.push_back(std::move(a));
  }
  j["arrows"] = std::move(arrows);
  json mul = json::array();
  for (int g = 0; g < G.arrows(); ++g)
    for (int h = 0; h < G.arrows(); ++h)
      if (auto p = G.mul(g, h))
        mul.push_back(json::array({G.arrow_id(g), G.arrow_id(h), G.arrow_id(*p)}));
  j["mul"] = std::move(mul);
  json inv = json::object(), ua = json::object();
  for (int g = 0; g < G.arrows(); ++g) inv[G.arrow_id(g)] = G.arrow_id(G.inverse(g));
  for (int x = 0; x < G.units(); ++x) ua[G.unit_id(x)] = G.arrow_id(G.unit_arrow(x));
  j["inv"] = std::move(inv);
  j["unit_arrows"] = std::move(ua);
  dump(j, out);
}

ReducedKernel load_kernel(std::istream& in, GroupoidRef G) {
  json j = parse_stream(in);
  auto [dims, values] = matrix_map_of(j, *G);
  for (auto& d : dims)
    if (d == 0) d = 1;
  ReducedKernel k(G, dims);
  for (int g = 0; g < G->arrows(); ++g)
    if (values[g].rows() > 0) k.set(g, std::move(values[g]));
  return k;
}

ReducedKernel load_kernel_file(const std::string& path, GroupoidRef G) {
  return load_file<ReducedKernel>(
      path, [&](std::istream& in) { return load_kernel(in, G); });
}

void save_kernel(const ReducedKernel& k, std::ostream& out) {
  json j = json::object();
  const auto& G = *k.groupoid();
  for (int g = 0; g < G.arrows(); ++g) j[G.arrow_id(g)] = matrix_json(k.at(g));
  dump(j, out);
}

EquivariantBundle load_bundle(std::istream& in, GroupoidRef G) {
  json j = parse_stream(in);
  auto [dims, values] = matrix_map_of(j, *G);
  for (int g = 0; g < G->arrows(); ++g)
    if (values[g].rows() == 0)
      throw value_error("bundle is missing the arrow " + G->arrow_id(g));
  for (auto& d : dims)
    if (d == 0) d = 1;  // unreachable once every arrow is present
  EquivariantBundle V;
  V.G = std::move(G);
  V.dims = std::move(dims);
  V.rho = std::move(values);
  return V;
}

EquivariantBundle load_bundle_file(const std::string& path, GroupoidRef G) {
  return load_file<EquivariantBundle>(
      path, [&](std::istream& in) { return load_bundle(in, G); });
}

void save_bundle(const EquivariantBundle& V, std::ostream& out) {
  json j = json::object();
  for (int g = 0; g < V.G->arrows(); ++g) j[V.G->arrow_id(g)] = matrix_json(V.rho.at(g));
  dump(j, out);
}

std::vector<RatMatrix> load_phi(std::istream& in, const FiniteGroupoid& G) {
  json j = parse_stream(in);
  if (!j.is_object()) throw value_error("section file must be an object keyed by unit ids");
  std::vector<RatMatrix> phi(G.units());
  std::vector<bool> have(G.units(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int x = G.unit_index(it.key());
    const json& col = it.value();
    if (!col.is_array() || col.empty())
      throw value_error("section entries must be nonempty arrays");
    RatMatrix m(static_cast<int>(col.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = rational_of(col[i], "section entry");
    phi[x] = std::move(m);
    have[x] = true;
  }
  for (int x = 0; x < G.units(); ++x)
    if (!have[x]) throw value_error("section is missing the unit " + G.unit_id(x));
  return phi;
}

std::vector<RatMatrix> load_phi_file(const std::string& path, const FiniteGroupoid& G) {
  return load_file<std::vector<RatMatrix>>(
      path, [&](std::istream& in) { return load_phi(in, G); });
}

void save_phi(const std::vector<RatMatrix>& phi, const FiniteGroupoid& G, std::ostream& out) {
  json j = json::object();
  for (int x = 0; x < G.units() && x < static_cast<int>(phi.size()); ++x) {
    json col = json::array();
    for (int i = 0; i < phi[x].rows(); ++i) col.push_back(to_string(phi[x].at(i, 0)));
    j[G.unit_id(x)] = std::move(col);
  }
  dump(j, out);
}

}  // namespace algq
