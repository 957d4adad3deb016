#include "cli.hpp"

#include "algq/catalog.hpp"
#include "algq/expr.hpp"
#include "algq/schema.hpp"
#include "algq/uea.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

namespace algq::cli {

namespace {

using nlohmann::json;

// File path first; a bare catalog name works as a fallback so the shipped
// examples can be run without exporting them.
AlgebroidRef algebroid_arg(const std::string& ref) {
  if (std::filesystem::exists(ref))
    return std::make_shared<const Algebroid>(load_algebroid_file(ref));
  try {
    return catalog_algebroid(ref);
  } catch (const value_error&) {
  }
  throw value_error("cannot open " + ref);
}

GroupoidRef groupoid_arg(const std::string& ref) {
  if (std::filesystem::exists(ref))
    return std::make_shared<const FiniteGroupoid>(load_groupoid_file(ref));
  try {
    return catalog_groupoid(ref);
  } catch (const value_error&) {
  }
  throw value_error("cannot open " + ref);
}

std::string triple_list(const std::vector<std::array<int, 3>>& ws) {
  std::string s;
  for (const auto& w : ws)
    s += " (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + ")";
  return s;
}

std::string pair_list(const std::vector<std::array<int, 2>>& ws) {
  std::string s;
  for (const auto& w : ws) s += " (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + ")";
  return s;
}

void print_witnesses(std::ostream& out, const std::string& name,
                     const std::vector<std::string>& ws) {
  out << name << ": " << (ws.empty() ? "PASS" : "FAIL") << "\n";
  std::size_t shown = std::min<std::size_t>(ws.size(), 5);
  for (std::size_t i = 0; i < shown; ++i) out << "  - " << ws[i] << "\n";
  if (ws.size() > shown) out << "  (+" << ws.size() - shown << " more)\n";
}

UEAElement element_arg(const AlgebroidRef& A, const std::string& expr) {
  auto words = words_from_terms(A, parse_terms(expr, true));
  return normal_form(words, A);
}

json result_json(const std::string& value) {
  json j;
  j["result"] = value;
  return j;
}

std::ostream& dump(const json& j, std::ostream& out) { return out << j.dump(2) << "\n"; }

struct Dispatch {
  std::ostream& out;
  std::ostream& err;
  int rc = 0;

  std::string file, arg1, arg2, arg3;
  bool as_json = false;

  void check_algebroid() {
    auto A = algebroid_arg(file);
    auto rep = check_axioms(*A);
    if (as_json) {
      json j;
      auto triples = [](const std::vector<std::array<int, 3>>& ws) {
        json a = json::array();
        for (const auto& w : ws) a.push_back({w[0], w[1], w[2]});
        return a;
      };
      json anchor = json::array();
      for (const auto& w : rep.anchor) anchor.push_back({w[0], w[1]});
      j["antisymmetry"] = triples(rep.antisymmetry);
      j["anchor"] = std::move(anchor);
      j["jacobi"] = triples(rep.jacobi);
      j["ok"] = rep.ok();
      dump(j, out);
    } else {
      out << "antisymmetry: "
          << (rep.antisymmetry_ok() ? "PASS" : "FAIL" + triple_list(rep.antisymmetry)) << "\n";
      out << "anchor: " << (rep.anchor_ok() ? "PASS" : "FAIL" + pair_list(rep.anchor)) << "\n";
      out << "jacobi: " << (rep.jacobi_ok() ? "PASS" : "FAIL" + triple_list(rep.jacobi))
          << "\n";
    }
    rc = rep.ok() ? 0 : 1;
  }

  void poisson_cmd() {
    auto A = algebroid_arg(file);
    Poly p = poisson(*A, parse_poly(arg1), parse_poly(arg2));
    if (as_json)
      dump(result_json(p.str()), out);
    else
      out << p.str() << "\n";
  }

  void bracket_cmd() {
    auto A = algebroid_arg(file);
    Section X = fiber_to_section(*A, parse_poly(arg1));
    Section Y = fiber_to_section(*A, parse_poly(arg2));
    Poly p = section_to_fiber(*A, bracket(*A, X, Y));
    if (as_json)
      dump(result_json(p.str()), out);
    else
      out << p.str() << "\n";
  }

  void normal_form_cmd() {
    auto A = algebroid_arg(file);
    auto e = element_arg(A, arg1);
    if (as_json)
      dump(result_json(e.str()), out);
    else
      out << e.str() << "\n";
  }

  void symbol_cmd() {
    auto A = algebroid_arg(file);
    Poly p = symbol(element_arg(A, arg1));
    if (as_json)
      dump(result_json(p.str()), out);
    else
      out << p.str() << "\n";
  }

  void star_cmd() {
    auto A = algebroid_arg(file);
    Poly p = star(A, parse_poly(arg1), parse_poly(arg2));
    if (as_json)
      dump(result_json(p.str()), out);
    else
      out << p.str() << "\n";
  }

  void adiabatic_cmd() {
    auto A = algebroid_arg(file);
    save_algebroid(adiabatic(*A), out);
  }

  void groupoid_check() {
    auto G = groupoid_arg(file);
    auto rep = check_groupoid(*G);
    if (as_json) {
      json j;
      j["domain"] = rep.domain;
      j["ends"] = rep.ends;
      j["associativity"] = rep.associativity;
      j["units"] = rep.units;
      j["inverses"] = rep.inverses;
      j["ok"] = rep.ok();
      dump(j, out);
    } else {
      print_witnesses(out, "domain", rep.domain);
      print_witnesses(out, "ends", rep.ends);
      print_witnesses(out, "associativity", rep.associativity);
      print_witnesses(out, "units", rep.units);
      print_witnesses(out, "inverses", rep.inverses);
    }
    rc = rep.ok() ? 0 : 1;
  }

  void groupoid_convolve() {
    auto G = groupoid_arg(file);
    auto k1 = load_kernel_file(arg1, G);
    auto k2 = load_kernel_file(arg2, G);
    save_kernel(convolve(k1, k2), out);
  }

  void groupoid_rep() {
    auto G = groupoid_arg(file);
    auto k = load_kernel_file(arg1, G);
    auto V = load_bundle_file(arg2, G);
    auto errs = check_equivariant(V);
    if (!errs.empty()) {
      for (const auto& e : errs) err << e << "\n";
      rc = 1;
      return;
    }
    auto phi = load_phi_file(arg3, *G);
    save_phi(represent(k, V, phi), *G, out);
  }

  void groupoid_roundtrip() {
    auto G = groupoid_arg(file);
    auto k = load_kernel_file(arg1, G);
    auto fam = family_from_kernel(k);
    auto back = kernel_from_family(fam);
    bool ok = back == k;
    out << "roundtrip: " << (ok ? "PASS" : "FAIL") << "\n";
    out << "support: " << k.support().size() << " of " << G->arrows() << " arrows\n";
    rc = ok ? 0 : 1;
  }

  void catalog_list() {
    if (as_json) {
      json a = json::array();
      for (const auto& e : algq::catalog()) {
        json j;
        j["name"] = e.name;
        j["kind"] = e.kind;
        j["summary"] = e.summary;
        a.push_back(std::move(j));
      }
      dump(a, out);
      return;
    }
    for (const auto& e : algq::catalog()) {
      out << e.name;
      for (std::size_t i = e.name.size(); i < 24; ++i) out << ' ';
      out << e.kind;
      for (std::size_t i = e.kind.size(); i < 16; ++i) out << ' ';
      out << e.summary << "\n";
    }
  }

  void catalog_export() {
    namespace fs = std::filesystem;
    fs::path dir(file);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw value_error("cannot create " + dir.string());
    for (const auto& e : algq::catalog()) {
      fs::path p = dir / (e.name + ".json");
      std::ofstream f(p);
      if (!f) throw value_error("cannot write " + p.string());
      if (e.algebroid)
        save_algebroid(*e.algebroid, f);
      else
        save_groupoid(*e.groupoid, f);
      out << "wrote " << p.string() << "\n";
    }
  }
};

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Lie algebroid calculus and finite groupoid convolution"};
  app.name("algq");
  app.require_subcommand(1);

  Dispatch d{out, err};

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", d.as_json, "emit JSON"); };

  auto* chk = app.add_subcommand("check-algebroid", "verify the algebroid axioms");
  chk->add_option("file", d.file, "algebroid file or catalog name")->required();
  add_json(chk);
  chk->callback([&] { d.check_algebroid(); });

  auto* poi = app.add_subcommand("poisson", "Poisson bracket of two polynomials");
  poi->add_option("file", d.file)->required();
  poi->add_option("f", d.arg1)->required();
  poi->add_option("g", d.arg2)->required();
  add_json(poi);
  poi->callback([&] { d.poisson_cmd(); });

  auto* brk = app.add_subcommand("bracket", "bracket of two degree-one sections");
  brk->add_option("file", d.file)->required();
  brk->add_option("X", d.arg1)->required();
  brk->add_option("Y", d.arg2)->required();
  add_json(brk);
  brk->callback([&] { d.bracket_cmd(); });

  auto* nf = app.add_subcommand("normal-form", "normal form of a generator expression");
  nf->add_option("file", d.file)->required();
  nf->add_option("expr", d.arg1)->required();
  add_json(nf);
  nf->callback([&] { d.normal_form_cmd(); });

  auto* sym = app.add_subcommand("symbol", "full symbol of a generator expression");
  sym->add_option("file", d.file)->required();
  sym->add_option("expr", d.arg1)->required();
  add_json(sym);
  sym->callback([&] { d.symbol_cmd(); });

  auto* st = app.add_subcommand("star", "star product of two fiber polynomials");
  st->add_option("file", d.file)->required();
  st->add_option("f", d.arg1)->required();
  st->add_option("g", d.arg2)->required();
  add_json(st);
  st->callback([&] { d.star_cmd(); });

  auto* adb = app.add_subcommand("adiabatic", "write the t-scaled algebroid");
  adb->add_option("file", d.file)->required();
  adb->callback([&] { d.adiabatic_cmd(); });

  auto* grp = app.add_subcommand("groupoid", "finite groupoid commands");
  grp->require_subcommand(1);

  auto* gchk = grp->add_subcommand("check", "verify the groupoid axioms");
  gchk->add_option("file", d.file, "groupoid file or catalog name")->required();
  add_json(gchk);
  gchk->callback([&] { d.groupoid_check(); });

  auto* gcon = grp->add_subcommand("convolve", "convolution of two kernels");
  gcon->add_option("file", d.file)->required();
  gcon->add_option("k1", d.arg1)->required();
  gcon->add_option("k2", d.arg2)->required();
  gcon->callback([&] { d.groupoid_convolve(); });

  auto* grep_ = grp->add_subcommand("rep", "apply a kernel to a section");
  grep_->add_option("file", d.file)->required();
  grep_->add_option("kernel", d.arg1)->required();
  grep_->add_option("bundle", d.arg2)->required();
  grep_->add_option("phi", d.arg3)->required();
  grep_->callback([&] { d.groupoid_rep(); });

  auto* grt = grp->add_subcommand("kernel-roundtrip", "kernel -> family -> kernel");
  grt->add_option("file", d.file)->required();
  grt->add_option("kernel", d.arg1)->required();
  grt->callback([&] { d.groupoid_roundtrip(); });

  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  auto* clist = cat->add_subcommand("list", "list the catalog");
  add_json(clist);
  clist->callback([&] { d.catalog_list(); });
  auto* cexp = cat->add_subcommand("export", "write every entry as a schema file");
  cexp->add_option("dir", d.file)->required();
  cexp->callback([&] { d.catalog_export(); });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const value_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return d.rc;
}

}  // namespace algq::cli
