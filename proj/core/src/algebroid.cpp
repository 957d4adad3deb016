#include "algq/algebroid.hpp"

#include <algorithm>

namespace algq {

Algebroid::Algebroid(int base_dim, int rank, bool with_t)
    : k_(base_dim), n_(rank), with_t_(with_t) {
  if (base_dim < 0 || rank < 1)
    throw value_error("algebroid needs base_dim >= 0 and rank >= 1");
  anchor_.assign(static_cast<std::size_t>(n_) * k_, Poly{});
  structure_.assign(static_cast<std::size_t>(n_) * n_ * n_, Poly{});
}

std::size_t Algebroid::aidx(int i, int a) const {
  if (i < 1 || i > n_ || a < 1 || a > k_)
    throw value_error("anchor index out of range");
  return static_cast<std::size_t>(i - 1) * k_ + (a - 1);
}

std::size_t Algebroid::sidx(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_)
    throw value_error("structure index out of range");
  return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
}

void Algebroid::set_anchor(int i, int a, const Poly& rho) {
  require_base_poly(rho, "anchor entry");
  anchor_[aidx(i, a)] = rho;
}

void Algebroid::set_bracket(int i, int j, int k, const Poly& c) {
  if (i >= j) throw value_error("structure entries need i < j");
  require_base_poly(c, "structure function");
  structure_[sidx(i, j, k)] = c;
  structure_[sidx(j, i, k)] = -c;
}

void Algebroid::set_structure_raw(int i, int j, int k, const Poly& c) {
  require_base_poly(c, "structure function");
  structure_[sidx(i, j, k)] = c;
}

const Poly& Algebroid::anchor(int i, int a) const { return anchor_[aidx(i, a)]; }

const Poly& Algebroid::structure(int i, int j, int k) const {
  return structure_[sidx(i, j, k)];
}

std::string Algebroid::base_var(int a) const {
  if (a < 1 || a > k_) throw value_error("base index out of range");
  return "x" + std::to_string(a);
}

std::string Algebroid::fiber_var(int i) const {
  if (i < 1 || i > n_) throw value_error("fiber index out of range");
  return "xi" + std::to_string(i);
}

std::vector<std::string> Algebroid::base_vars() const {
  std::vector<std::string> v;
  for (int a = 1; a <= k_; ++a) v.push_back(base_var(a));
  return v;
}

std::vector<std::string> Algebroid::fiber_vars() const {
  std::vector<std::string> v;
  for (int i = 1; i <= n_; ++i) v.push_back(fiber_var(i));
  return v;
}

namespace {

long var_suffix(const std::string& name, std::size_t from) {
  long v = 0;
  for (std::size_t i = from; i < name.size(); ++i) v = v * 10 + (name[i] - '0');
  return v;
}

}  // namespace

bool Algebroid::allows_base(const std::string& var) const {
  switch (var_class(var)) {
    case 0: return var_suffix(var, 1) <= k_;
    case 2: return with_t_;
    default: return false;
  }
}

bool Algebroid::allows_fiber(const std::string& var) const {
  if (var_class(var) == 1) return var_suffix(var, 2) <= n_;
  return allows_base(var);
}

void Algebroid::require_base_poly(const Poly& p, const std::string& what) const {
  for (const auto& v : p.vars())
    if (!allows_base(v))
      throw value_error(what + " '" + p.str() + "' mentions '" + v +
                        "', which is outside this algebroid's base variables");
}

void Algebroid::require_fiber_poly(const Poly& p, const std::string& what) const {
  for (const auto& v : p.vars())
    if (!allows_fiber(v))
      throw value_error(what + " '" + p.str() + "' mentions '" + v +
                        "', which is outside this algebroid's variables");
}

Section zero_section(const Algebroid& A) {
  return Section{std::vector<Poly>(static_cast<std::size_t>(A.rank()))};
}

Section basis_section(const Algebroid& A, int i) {
  if (i < 1 || i > A.rank()) throw value_error("frame index out of range");
  Section s = zero_section(A);
  s.comp[i - 1] = Poly{1};
  return s;
}

namespace {

void require_section(const Algebroid& A, const Section& X, const std::string& what) {
  if (X.comp.size() != static_cast<std::size_t>(A.rank()))
    throw value_error(what + " has " + std::to_string(X.comp.size()) +
                      " components, expected " + std::to_string(A.rank()));
  for (const auto& c : X.comp) A.require_base_poly(c, what + " component");
}

}  // namespace

Poly anchor_apply(const Algebroid& A, int i, const Poly& f) {
  A.require_base_poly(f, "function");
  Poly out;
  for (int a = 1; a <= A.base_dim(); ++a)
    out += A.anchor(i, a) * f.partial(A.base_var(a));
  return out;
}

Poly anchor_apply(const Algebroid& A, const Section& X, const Poly& f) {
  require_section(A, X, "section");
  Poly out;
  for (int i = 1; i <= A.rank(); ++i)
    if (!X.comp[i - 1].is_zero()) out += X.comp[i - 1] * anchor_apply(A, i, f);
  return out;
}

Section bracket(const Algebroid& A, const Section& X, const Section& Y) {
  require_section(A, X, "left section");
  require_section(A, Y, "right section");
  const int n = A.rank();
  Section out = zero_section(A);
  for (int k = 1; k <= n; ++k) {
    Poly acc;
    for (int i = 1; i <= n; ++i) {
      if (X.comp[i - 1].is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        const Poly& c = A.structure(i, j, k);
        if (!c.is_zero() && !Y.comp[j - 1].is_zero())
          acc += X.comp[i - 1] * Y.comp[j - 1] * c;
      }
    }
    acc += anchor_apply(A, X, Y.comp[k - 1]);
    acc -= anchor_apply(A, Y, X.comp[k - 1]);
    out.comp[k - 1] = std::move(acc);
  }
  return out;
}

AxiomReport check_axioms(const Algebroid& A) {
  AxiomReport rep;
  const int n = A.rank();
  const int k = A.base_dim();

  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        if (!(A.structure(i, j, l) + A.structure(j, i, l)).is_zero())
          rep.antisymmetry.push_back({i, j, l});

  // rho([e_i,e_j]) and the commutator of the anchor fields, compared
  // coefficient-wise in d/dx_b.
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool bad = false;
      for (int b = 1; b <= k && !bad; ++b) {
        Poly lhs;
        for (int l = 1; l <= n; ++l) {
          const Poly& c = A.structure(i, j, l);
          if (!c.is_zero()) lhs += c * A.anchor(l, b);
        }
        Poly rhs;
        for (int a = 1; a <= k; ++a) {
          rhs += A.anchor(i, a) * A.anchor(j, b).partial(A.base_var(a));
          rhs -= A.anchor(j, a) * A.anchor(i, b).partial(A.base_var(a));
        }
        bad = !(lhs == rhs);
      }
      if (bad) rep.anchor.push_back({i, j});
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int l = j + 1; l <= n; ++l) {
        Section ei = basis_section(A, i), ej = basis_section(A, j), el = basis_section(A, l);
        Section sum = bracket(A, bracket(A, ei, ej), el);
        Section s2 = bracket(A, bracket(A, ej, el), ei);
        Section s3 = bracket(A, bracket(A, el, ei), ej);
        for (int m = 0; m < n; ++m) sum.comp[m] += s2.comp[m] + s3.comp[m];
        if (!(sum == zero_section(A))) rep.jacobi.push_back({i, j, l});
      }
    }
  }
  return rep;
}

Poly poisson(const Algebroid& A, const Poly& f, const Poly& g) {
  A.require_fiber_poly(f, "left argument");
  A.require_fiber_poly(g, "right argument");
  const int n = A.rank();
  const int k = A.base_dim();
  std::vector<Poly> df(n), dg(n);
  for (int i = 1; i <= n; ++i) {
    df[i - 1] = f.partial(A.fiber_var(i));
    dg[i - 1] = g.partial(A.fiber_var(i));
  }
  Poly out;
  for (int i = 1; i <= n; ++i) {
    if (df[i - 1].is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      if (dg[j - 1].is_zero()) continue;
      Poly pair;
      for (int l = 1; l <= n; ++l) {
        const Poly& c = A.structure(i, j, l);
        if (!c.is_zero()) pair += c * Poly::variable(A.fiber_var(l));
      }
      if (!pair.is_zero()) out += df[i - 1] * dg[j - 1] * pair;
    }
  }
  for (int a = 1; a <= k; ++a) {
    Poly fx = f.partial(A.base_var(a));
    Poly gx = g.partial(A.base_var(a));
    for (int i = 1; i <= n; ++i) {
      const Poly& rho = A.anchor(i, a);
      if (rho.is_zero()) continue;
      if (!df[i - 1].is_zero() && !gx.is_zero()) out += df[i - 1] * gx * rho;
      if (!fx.is_zero() && !dg[i - 1].is_zero()) out -= fx * dg[i - 1] * rho;
    }
  }
  return out;
}

Algebroid adiabatic(const Algebroid& A) {
  if (A.has_t()) throw value_error("algebroid already carries the deformation variable t");
  Algebroid B(A.base_dim(), A.rank(), true);
  Poly t = Poly::variable("t");
  for (int i = 1; i <= A.rank(); ++i)
    for (int a = 1; a <= A.base_dim(); ++a)
      if (!A.anchor(i, a).is_zero()) B.set_anchor(i, a, t * A.anchor(i, a));
  for (int i = 1; i <= A.rank(); ++i)
    for (int j = 1; j <= A.rank(); ++j)
      for (int k = 1; k <= A.rank(); ++k)
        if (!A.structure(i, j, k).is_zero())
          B.set_structure_raw(i, j, k, t * A.structure(i, j, k));
  return B;
}

Poly section_to_fiber(const Algebroid& A, const Section& X) {
  require_section(A, X, "section");
  Poly out;
  for (int i = 1; i <= A.rank(); ++i)
    out += X.comp[i - 1] * Poly::variable(A.fiber_var(i));
  return out;
}

Section fiber_to_section(const Algebroid& A, const Poly& p) {
  A.require_fiber_poly(p, "fiber polynomial");
  Section out = zero_section(A);
  for (const auto& [key, coeff] : fiber_terms(A, p)) {
    long total = 0;
    int where = 0;
    for (int i = 0; i < A.rank(); ++i) {
      total += key[i];
      if (key[i] > 0) where = i;
    }
    if (total != 1)
      throw value_error("'" + p.str() + "' is not homogeneous of fiber degree one");
    out.comp[where] += coeff;
  }
  return out;
}

std::map<Exponents, Poly> fiber_terms(const Algebroid& A, const Poly& p) {
  A.require_fiber_poly(p, "fiber polynomial");
  return split_by(p, A.fiber_vars());
}

long fiber_degree(const Algebroid& A, const Poly& p) {
  if (p.is_zero()) return -1;
  long best = 0;
  for (const auto& [key, coeff] : fiber_terms(A, p)) {
    long d = 0;
    for (auto e : key) d += e;
    best = std::max(best, d);
  }
  return best;
}

}  // namespace algq
