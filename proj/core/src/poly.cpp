#include "algq/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace algq {

namespace {

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

long numeric_suffix(const std::string& s, std::size_t from) {
  long v = 0;
  for (std::size_t i = from; i < s.size(); ++i) {
    v = v * 10 + (s[i] - '0');
    if (v > 1000000) return 1000000;
  }
  return v;
}

}  // namespace

int var_class(const std::string& name) {
  if (name == "t") return 2;
  if (name.size() > 2 && name[0] == 'x' && name[1] == 'i' && all_digits(name, 2)) return 1;
  if (name.size() > 1 && name[0] == 'x' && all_digits(name, 1)) return 0;
  return 3;
}

bool var_name_valid(const std::string& name) {
  if (name.empty()) return false;
  char c0 = name[0];
  if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool var_less(const std::string& a, const std::string& b) {
  int ca = var_class(a), cb = var_class(b);
  if (ca != cb) return ca < cb;
  if (ca == 0) return numeric_suffix(a, 1) < numeric_suffix(b, 1);
  if (ca == 1) return numeric_suffix(a, 2) < numeric_suffix(b, 2);
  return a < b;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Exponents{}] = c;
}

Poly Poly::variable(const std::string& name) {
  if (!var_name_valid(name)) throw value_error("bad variable name: '" + name + "'");
  Poly p;
  p.vars_ = {name};
  p.terms_[Exponents{1}] = Rational(1);
  return p;
}

bool Poly::is_constant() const { return vars_.empty(); }

Rational Poly::constant_value() const {
  if (!is_constant()) throw value_error("polynomial '" + str() + "' is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool Poly::mentions(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

namespace {

// Union of two canonical variable lists plus, for each input list, the
// position its variables take in the union.
void merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b,
                std::vector<std::string>& out, std::vector<std::size_t>& pos_a,
                std::vector<std::size_t>& pos_b) {
  out.clear();
  pos_a.assign(a.size(), 0);
  pos_b.assign(b.size(), 0);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && var_less(a[i], b[j]))) {
      pos_a[i++] = out.size();
      out.push_back(a[i - 1]);
    } else if (i == a.size() || var_less(b[j], a[i])) {
      pos_b[j++] = out.size();
      out.push_back(b[j - 1]);
    } else {
      pos_a[i++] = out.size();
      pos_b[j++] = out.size();
      out.push_back(a[i - 1]);
    }
  }
}

Exponents remap(const Exponents& e, const std::vector<std::size_t>& pos, std::size_t width) {
  Exponents r(width, 0);
  for (std::size_t i = 0; i < e.size(); ++i) r[pos[i]] = e[i];
  return r;
}

}  // namespace

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<std::string> merged;
  std::vector<std::size_t> pa, pb;
  merge_vars(vars_, o.vars_, merged, pa, pb);
  std::map<Exponents, Rational> out;
  for (const auto& [e, c] : terms_) out[remap(e, pa, merged.size())] = c;
  for (const auto& [e, c] : o.terms_) {
    auto& slot = out[remap(e, pb, merged.size())];
    slot += c;
  }
  vars_ = std::move(merged);
  terms_ = std::move(out);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  std::vector<std::size_t> pa, pb;
  merge_vars(a.vars_, b.vars_, r.vars_, pa, pb);
  const std::size_t w = r.vars_.size();
  for (const auto& [ea, ca] : a.terms_) {
    Exponents base = remap(ea, pa, w);
    for (const auto& [eb, cb] : b.terms_) {
      Exponents key = base;
      for (std::size_t i = 0; i < eb.size(); ++i) key[pb[i]] += eb[i];
      r.terms_[key] += ca * cb;
    }
  }
  r.normalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Rational& c, const Poly& p) {
  if (c == 0) return Poly{};
  Poly r = p;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly r(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return r;
}

long Poly::total_degree() const {
  if (is_zero()) return -1;
  long best = 0;
  for (const auto& [e, c] : terms_) {
    long d = 0;
    for (auto x : e) d += x;
    best = std::max(best, d);
  }
  return best;
}

long Poly::degree(const std::string& name) const {
  if (is_zero()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return 0;
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  long best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<long>(e[idx]));
  return best;
}

Rational Poly::coeff(const std::map<std::string, std::uint32_t>& monomial) const {
  for (const auto& [name, exp] : monomial)
    if (exp > 0 && !mentions(name)) return Rational(0);
  Exponents key(vars_.size(), 0);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = monomial.find(vars_[i]);
    if (it != monomial.end()) key[i] = it->second;
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::partial(const std::string& name) const {
  if (!var_name_valid(name)) throw value_error("unknown variable name: '" + name + "'");
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return Poly{};
  std::size_t idx = static_cast<std::size_t>(it - vars_.begin());
  Poly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    r.terms_[d] += Rational(e[idx]) * c;
  }
  r.normalize();
  return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings) const {
  for (const auto& [name, value] : bindings)
    if (!var_name_valid(name)) throw value_error("unknown variable name: '" + name + "'");
  if (is_zero()) return Poly{};
  std::vector<const Poly*> repl(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) repl[i] = &it->second;
  }
  std::vector<std::map<std::uint32_t, Poly>> pow_cache(vars_.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = pow_cache[i];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Poly base = repl[i] ? *repl[i] : Poly::variable(vars_[i]);
    return cache.emplace(e, base.pow(e)).first->second;
  };
  Poly sum;
  for (const auto& [e, c] : terms_) {
    Poly prod{c};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) prod *= power(i, e[i]);
    sum += prod;
  }
  return sum;
}

void Poly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) {
    vars_.clear();
    return;
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  std::map<Exponents, Rational> out;
  for (const auto& [e, c] : terms_) {
    Exponents k;
    k.reserve(kept.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) k.push_back(e[i]);
    out[std::move(k)] = c;
  }
  vars_ = std::move(kept);
  terms_ = std::move(out);
}

namespace {

std::string rational_str(const Rational& r, bool parenthesize_fractions) {
  std::string s = r.str();
  if (parenthesize_fractions && denominator(r) != 1) return "(" + s + ")";
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::size_t t_idx = vars_.size();
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == "t") t_idx = i;

  struct Row {
    const Exponents* e;
    const Rational* c;
    std::uint32_t t_exp;
    long rest_deg;
  };
  std::vector<Row> rows;
  rows.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    std::uint32_t te = (t_idx < e.size()) ? e[t_idx] : 0;
    long deg = -static_cast<long>(te);
    for (auto x : e) deg += x;
    rows.push_back({&e, &c, te, deg});
  }
  // Terms grouped by ascending power of t; within a group, higher degree
  // first, then reverse lexicographic so x1^2 precedes x1*x2.
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    if (a.t_exp != b.t_exp) return a.t_exp < b.t_exp;
    if (a.rest_deg != b.rest_deg) return a.rest_deg > b.rest_deg;
    return *a.e > *b.e;
  });

  std::ostringstream os;
  bool first = true;
  for (const Row& row : rows) {
    bool neg = *row.c < 0;
    Rational mag = neg ? Rational(-*row.c) : *row.c;
    std::vector<std::string> pieces;
    auto emit = [&](std::size_t i) {
      if ((*row.e)[i] == 0) return;
      if ((*row.e)[i] == 1)
        pieces.push_back(vars_[i]);
      else
        pieces.push_back(vars_[i] + "^" + std::to_string((*row.e)[i]));
    };
    if (t_idx < vars_.size()) emit(t_idx);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (i != t_idx) emit(i);

    std::string body;
    if (pieces.empty()) {
      body = rational_str(mag, false);
    } else {
      std::string mono = pieces[0];
      for (std::size_t i = 1; i < pieces.size(); ++i) mono += "*" + pieces[i];
      body = (mag == 1) ? mono : rational_str(mag, true) + "*" + mono;
    }
    if (first) {
      os << (neg ? "-" : "") << body;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
  }
  return os.str();
}

std::map<Exponents, Poly> split_by(const Poly& p, const std::vector<std::string>& group_vars) {
  for (const auto& v : group_vars)
    if (!var_name_valid(v)) throw value_error("unknown variable name: '" + v + "'");
  std::map<Exponents, Poly> out;
  if (p.is_zero()) return out;
  const auto& vars = p.vars();
  std::vector<std::size_t> group_pos(group_vars.size(), vars.size());
  std::vector<bool> grouped(vars.size(), false);
  for (std::size_t g = 0; g < group_vars.size(); ++g) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == group_vars[g]) {
        group_pos[g] = i;
        grouped[i] = true;
      }
    }
  }
  for (const auto& [e, c] : p.terms()) {
    Exponents key(group_vars.size(), 0);
    for (std::size_t g = 0; g < group_vars.size(); ++g)
      if (group_pos[g] < e.size()) key[g] = e[group_pos[g]];
    Poly mono{c};
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!grouped[i] && e[i] > 0) mono *= Poly::variable(vars[i]).pow(e[i]);
    out[key] += mono;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace algq
