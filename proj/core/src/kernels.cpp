#include "algq/kernels.hpp"

namespace algq {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw value_error(msg);
}

void require_compatible(const GroupoidRef& a, const std::vector<int>& da, const GroupoidRef& b,
                        const std::vector<int>& db, const char* what) {
  require(a && b, std::string("missing groupoid in ") + what);
  require(a == b || *a == *b, std::string("different groupoids in ") + what);
  require(da == db, std::string("different fiber dimensions in ") + what);
}

std::vector<int> checked_dims(const GroupoidRef& G, std::vector<int> dims) {
  require(static_cast<bool>(G), "kernel needs a groupoid");
  require(static_cast<int>(dims.size()) == G->units(), "one fiber dimension per unit");
  for (int d : dims) require(d >= 1, "fiber dimensions must be positive");
  return dims;
}

}  // namespace

ReducedKernel::ReducedKernel(GroupoidRef G, std::vector<int> dims)
    : G_(std::move(G)), dims_(checked_dims(G_, std::move(dims))) {
  values_.reserve(G_->arrows());
  for (int g = 0; g < G_->arrows(); ++g)
    values_.emplace_back(dims_[G_->r(g)], dims_[G_->d(g)]);
}

ReducedKernel ReducedKernel::scalar(GroupoidRef G) {
  require(static_cast<bool>(G), "kernel needs a groupoid");
  std::vector<int> ones(G->units(), 1);
  return ReducedKernel(std::move(G), std::move(ones));
}

ReducedKernel ReducedKernel::delta(GroupoidRef G, std::vector<int> dims) {
  ReducedKernel k(std::move(G), std::move(dims));
  for (int x = 0; x < k.G_->units(); ++x)
    k.values_[k.G_->unit_arrow(x)] = RatMatrix::identity(k.dims_[x]);
  return k;
}

void ReducedKernel::set(int g, RatMatrix m) {
  require(0 <= g && g < static_cast<int>(values_.size()), "arrow index out of range");
  require(m.rows() == dims_[G_->r(g)] && m.cols() == dims_[G_->d(g)],
          "kernel value has wrong shape at " + G_->arrow_id(g));
  values_[g] = std::move(m);
}

void ReducedKernel::set(const std::string& arrow_id, const Rational& v) {
  int g = G_->arrow_index(arrow_id);
  RatMatrix m(dims_[G_->r(g)], dims_[G_->d(g)]);
  require(m.rows() == 1 && m.cols() == 1, "scalar set needs one-dimensional fibers");
  m.at(0, 0) = v;
  values_[g] = std::move(m);
}

std::vector<int> ReducedKernel::support() const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(values_.size()); ++g)
    if (!values_[g].is_zero()) out.push_back(g);
  return out;
}

ReducedKernel& ReducedKernel::operator+=(const ReducedKernel& o) {
  require_compatible(G_, dims_, o.G_, o.dims_, "kernel addition");
  for (std::size_t g = 0; g < values_.size(); ++g) values_[g] += o.values_[g];
  return *this;
}

ReducedKernel& ReducedKernel::operator-=(const ReducedKernel& o) {
  require_compatible(G_, dims_, o.G_, o.dims_, "kernel subtraction");
  for (std::size_t g = 0; g < values_.size(); ++g) values_[g] -= o.values_[g];
  return *this;
}

ReducedKernel& ReducedKernel::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

bool operator==(const ReducedKernel& a, const ReducedKernel& b) {
  if (!(a.G_ == b.G_ || *a.G_ == *b.G_)) return false;
  return a.dims_ == b.dims_ && a.values_ == b.values_;
}

ReducedKernel convolve(const ReducedKernel& f1, const ReducedKernel& f2) {
  require_compatible(f1.groupoid(), f1.dims(), f2.groupoid(), f2.dims(), "convolve");
  const auto& G = *f1.groupoid();
  ReducedKernel out(f1.groupoid(), f1.dims());
  for (int h1 = 0; h1 < G.arrows(); ++h1) {
    if (f1.at(h1).is_zero()) continue;
    for (int h2 = 0; h2 < G.arrows(); ++h2) {
      if (!G.composable(h1, h2)) continue;
      if (f2.at(h2).is_zero()) continue;
      int g = G.mul_or_throw(h1, h2);
      out.set(g, out.at(g) + f1.at(h1) * f2.at(h2));
    }
  }
  return out;
}

InvariantFamily::InvariantFamily(GroupoidRef G, std::vector<int> dims)
    : G_(std::move(G)), dims_(checked_dims(G_, std::move(dims))) {
  pos_.assign(G_->arrows(), -1);
  blocks_.resize(G_->units());
  for (int x = 0; x < G_->units(); ++x) {
    const auto& gx = G_->arrows_into(x);
    for (std::size_t p = 0; p < gx.size(); ++p) pos_[gx[p]] = static_cast<int>(p);
    blocks_[x].reserve(gx.size() * gx.size());
    for (int hp : gx)
      for (int h : gx) blocks_[x].emplace_back(dims_[G_->r(hp)], dims_[G_->r(h)]);
  }
}

InvariantFamily InvariantFamily::identity(GroupoidRef G, std::vector<int> dims) {
  InvariantFamily P(std::move(G), std::move(dims));
  for (int x = 0; x < P.G_->units(); ++x)
    for (int h : P.G_->arrows_into(x))
      P.set_block(h, h, RatMatrix::identity(P.dims_[P.G_->r(h)]));
  return P;
}

std::size_t InvariantFamily::slot(int hprime, int h) const {
  require(0 <= hprime && hprime < G_->arrows() && 0 <= h && h < G_->arrows(),
          "arrow index out of range");
  require(G_->d(hprime) == G_->d(h), "block needs arrows with a common source");
  return static_cast<std::size_t>(pos_[hprime]) * G_->arrows_into(G_->d(h)).size() + pos_[h];
}

const RatMatrix& InvariantFamily::block(int hprime, int h) const {
  return blocks_[G_->d(h)][slot(hprime, h)];
}

void InvariantFamily::set_block(int hprime, int h, RatMatrix m) {
  require(m.rows() == dims_[G_->r(hprime)] && m.cols() == dims_[G_->r(h)],
          "block has wrong shape at (" + G_->arrow_id(hprime) + ", " + G_->arrow_id(h) + ")");
  blocks_[G_->d(h)][slot(hprime, h)] = std::move(m);
}

bool operator==(const InvariantFamily& a, const InvariantFamily& b) {
  if (!(a.G_ == b.G_ || *a.G_ == *b.G_)) return false;
  return a.dims_ == b.dims_ && a.blocks_ == b.blocks_;
}

std::vector<std::string> invariance_errors(const InvariantFamily& P) {
  const auto& G = *P.groupoid();
  std::vector<std::string> errs;
  for (int g = 0; g < G.arrows(); ++g) {
    const auto& at_r = G.arrows_into(G.r(g));
    for (int hp : at_r)
      for (int h : at_r) {
        int hpg = G.mul_or_throw(hp, g);
        int hg = G.mul_or_throw(h, g);
        if (P.block(hp, h) != P.block(hpg, hg))
          errs.push_back("k_" + G.unit_id(G.r(g)) + "(" + G.arrow_id(hp) + ", " +
                         G.arrow_id(h) + ") != k_" + G.unit_id(G.d(g)) + "(" +
                         G.arrow_id(hpg) + ", " + G.arrow_id(hg) + ") under g = " +
                         G.arrow_id(g));
      }
  }
  return errs;
}

ReducedKernel kernel_from_family(const InvariantFamily& P) {
  auto errs = invariance_errors(P);
  if (!errs.empty()) throw value_error("family is not invariant: " + errs.front());
  const auto& G = *P.groupoid();
  ReducedKernel k(P.groupoid(), P.dims());
  for (int g = 0; g < G.arrows(); ++g) k.set(g, P.block(g, G.unit_arrow(G.d(g))));
  return k;
}

InvariantFamily family_from_kernel(const ReducedKernel& k) {
  const auto& G = *k.groupoid();
  InvariantFamily P(k.groupoid(), k.dims());
  for (int x = 0; x < G.units(); ++x)
    for (int hp : G.arrows_into(x))
      for (int h : G.arrows_into(x))
        P.set_block(hp, h, k.at(G.mul_or_throw(hp, G.inverse(h))));
  return P;
}

InvariantFamily compose_families(const InvariantFamily& P, const InvariantFamily& Q) {
  require_compatible(P.G_, P.dims_, Q.G_, Q.dims_, "compose_families");
  const auto& G = *P.G_;
  InvariantFamily out(P.G_, P.dims_);
  for (int x = 0; x < G.units(); ++x)
    for (int hpp : G.arrows_into(x))
      for (int h : G.arrows_into(x)) {
        RatMatrix acc(P.dims_[G.r(hpp)], P.dims_[G.r(h)]);
        for (int hp : G.arrows_into(x)) acc += P.block(hpp, hp) * Q.block(hp, h);
        out.set_block(hpp, h, std::move(acc));
      }
  return out;
}

std::vector<std::string> check_equivariant(const EquivariantBundle& V) {
  std::vector<std::string> errs;
  if (!V.G) return {"missing groupoid"};
  const auto& G = *V.G;
  if (static_cast<int>(V.dims.size()) != G.units()) return {"one fiber dimension per unit"};
  for (int d : V.dims)
    if (d < 1) return {"fiber dimensions must be positive"};
  if (static_cast<int>(V.rho.size()) != G.arrows()) return {"one matrix per arrow"};

  for (int g = 0; g < G.arrows(); ++g)
    if (V.rho[g].rows() != V.dims[G.r(g)] || V.rho[g].cols() != V.dims[G.d(g)])
      errs.push_back("rho(" + G.arrow_id(g) + ") has wrong shape");
  if (!errs.empty()) return errs;

  for (int x = 0; x < G.units(); ++x)
    if (V.rho[G.unit_arrow(x)] != RatMatrix::identity(V.dims[x]))
      errs.push_back("rho at the unit arrow of " + G.unit_id(x) + " is not the identity");
  for (int g = 0; g < G.arrows(); ++g)
    for (int h = 0; h < G.arrows(); ++h) {
      if (!G.composable(g, h)) continue;
      auto gh = G.mul(g, h);
      if (!gh) continue;
      if (V.rho[*gh] != V.rho[g] * V.rho[h])
        errs.push_back("rho(" + G.arrow_id(*gh) + ") != rho(" + G.arrow_id(g) + ")rho(" +
                       G.arrow_id(h) + ")");
    }
  return errs;
}

EquivariantBundle trivial_bundle(GroupoidRef G) {
  require(static_cast<bool>(G), "bundle needs a groupoid");
  EquivariantBundle V;
  V.dims.assign(G->units(), 1);
  V.rho.assign(G->arrows(), RatMatrix::identity(1));
  V.G = std::move(G);
  return V;
}

EquivariantBundle coboundary_bundle(GroupoidRef G, const std::vector<RatMatrix>& lambda) {
  require(static_cast<bool>(G), "bundle needs a groupoid");
  require(static_cast<int>(lambda.size()) == G->units(), "one matrix per unit");
  EquivariantBundle V;
  V.G = G;
  std::vector<RatMatrix> lam_inv;
  for (const auto& m : lambda) {
    require(m.rows() == m.cols() && m.rows() >= 1, "lambda entries must be square");
    V.dims.push_back(m.rows());
    lam_inv.push_back(inverse(m));
  }
  for (int g = 0; g < G->arrows(); ++g) V.rho.push_back(lambda[G->r(g)] * lam_inv[G->d(g)]);
  auto errs = check_equivariant(V);
  if (!errs.empty()) throw value_error(errs.front());
  return V;
}

std::vector<RatMatrix> represent(const ReducedKernel& f, const EquivariantBundle& V,
                                 const std::vector<RatMatrix>& phi) {
  require(f.groupoid() == V.G || *f.groupoid() == *V.G, "kernel and bundle groupoids differ");
  auto errs = check_equivariant(V);
  if (!errs.empty()) throw value_error("bundle is not equivariant: " + errs.front());
  const auto& G = *V.G;
  require(static_cast<int>(phi.size()) == G.units(), "one section value per unit");
  for (int x = 0; x < G.units(); ++x)
    require(phi[x].rows() == V.dims[x] && phi[x].cols() == 1,
            "section value at " + G.unit_id(x) + " has wrong shape");

  std::vector<RatMatrix> out;
  for (int x = 0; x < G.units(); ++x) out.emplace_back(V.dims[x], 1);
  for (int x = 0; x < G.units(); ++x) {
    for (int h : G.arrows_into(x)) {
      int hi = G.inverse(h);
      RatMatrix v = V.rho[hi] * phi[G.r(h)];
      const RatMatrix& fm = f.at(hi);
      if (fm.rows() == 1 && fm.cols() == 1)
        out[x] += fm.at(0, 0) * v;
      else
        out[x] += fm * v;
    }
  }
  return out;
}

}  // namespace algq
