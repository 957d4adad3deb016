#include "algq/uea.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace algq {

UEAElement::UEAElement(AlgebroidRef A) : alg_(std::move(A)) {
  if (!alg_) throw value_error("element needs an algebroid");
}

long UEAElement::order() const {
  long best = -1;
  for (const auto& [alpha, c] : terms_) {
    long d = 0;
    for (auto e : alpha) d += e;
    best = std::max(best, d);
  }
  return best;
}

void UEAElement::add_term(const MultiIndex& alpha, const Poly& coeff) {
  if (alpha.size() != static_cast<std::size_t>(alg_->rank()))
    throw value_error("multi-index length " + std::to_string(alpha.size()) +
                      " does not match rank " + std::to_string(alg_->rank()));
  alg_->require_base_poly(coeff, "coefficient");
  if (coeff.is_zero()) return;
  auto& slot = terms_[alpha];
  slot += coeff;
  if (slot.is_zero()) terms_.erase(alpha);
}

Poly UEAElement::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Poly{} : it->second;
}

UEAElement UEAElement::operator-() const {
  UEAElement r(alg_);
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
  return r;
}

namespace {

void require_same(const UEAElement& a, const UEAElement& b) {
  const auto& A = a.algebroid();
  const auto& B = b.algebroid();
  if (A != B && !(*A == *B)) throw value_error("algebroid mismatch between operands");
}

}  // namespace

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  require_same(*this, o);
  for (const auto& [a, c] : o.terms_) {
    auto& slot = terms_[a];
    slot += c;
    if (slot.is_zero()) terms_.erase(a);
  }
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) { return *this += -o; }

UEAElement UEAElement::scaled_left(const Poly& f) const {
  alg_->require_base_poly(f, "left factor");
  UEAElement r(alg_);
  if (f.is_zero()) return r;
  for (const auto& [a, c] : terms_) {
    Poly sc = f * c;
    if (!sc.is_zero()) r.terms_.emplace(a, std::move(sc));
  }
  return r;
}

bool operator==(const UEAElement& a, const UEAElement& b) {
  if (a.alg_ != b.alg_ && !(*a.alg_ == *b.alg_)) return false;
  return a.terms_ == b.terms_;
}

std::string UEAElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const MultiIndex, Poly>*> rows;
  for (const auto& term : terms_) rows.push_back(&term);
  auto deg = [](const MultiIndex& a) {
    long d = 0;
    for (auto e : a) d += e;
    return d;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto* a, const auto* b) {
    long da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* row : rows) {
    std::string letters;
    for (std::size_t i = 0; i < row->first.size(); ++i) {
      if (row->first[i] == 0) continue;
      if (!letters.empty()) letters += "·";
      letters += "e" + std::to_string(i + 1);
      if (row->first[i] > 1) letters += "^" + std::to_string(row->first[i]);
    }
    std::string body;
    if (row->second == Poly{1} && !letters.empty())
      body = letters;
    else
      body = "(" + row->second.str() + ")" + (letters.empty() ? "" : "·" + letters);
    if (!first) os << " + ";
    os << body;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UEAElement& a) { return os << a.str(); }

// --- the rewrite engine -----------------------------------------------

namespace {

struct Redex {
  enum Kind { Absorb, Merge, SwapFn, SwapGen } kind;
  std::size_t pos;
};

bool is_gen(const Letter& l) { return std::holds_alternative<int>(l); }

std::vector<Redex> find_redexes(const FreeWord& w) {
  std::vector<Redex> out;
  const auto& ls = w.letters;
  if (!ls.empty() && !is_gen(ls[0])) out.push_back({Redex::Absorb, 0});
  for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
    bool lg = is_gen(ls[p]), rg = is_gen(ls[p + 1]);
    if (!lg && !rg)
      out.push_back({Redex::Merge, p});
    else if (lg && !rg)
      out.push_back({Redex::SwapFn, p});
    else if (lg && rg && std::get<int>(ls[p]) > std::get<int>(ls[p + 1]))
      out.push_back({Redex::SwapGen, p});
  }
  return out;
}

// Contracts one redex; pushes the resulting words onto the stack.
void apply_redex(const Algebroid& A, FreeWord w, const Redex& r,
                 std::vector<FreeWord>& stack) {
  auto push = [&](FreeWord&& nw) {
    if (!nw.prefix.is_zero()) stack.push_back(std::move(nw));
  };
  auto spliced = [&](std::size_t pos, std::initializer_list<Letter> mid) {
    FreeWord nw;
    nw.prefix = w.prefix;
    nw.letters.assign(w.letters.begin(), w.letters.begin() + pos);
    for (const auto& l : mid) nw.letters.push_back(l);
    nw.letters.insert(nw.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
    return nw;
  };
  switch (r.kind) {
    case Redex::Absorb: {
      w.prefix *= std::get<Poly>(w.letters[0]);
      w.letters.erase(w.letters.begin());
      push(std::move(w));
      return;
    }
    case Redex::Merge: {
      Poly merged = std::get<Poly>(w.letters[r.pos]) * std::get<Poly>(w.letters[r.pos + 1]);
      if (merged.is_zero()) return;
      push(spliced(r.pos, {Letter{std::move(merged)}}));
      return;
    }
    case Redex::SwapFn: {
      int g = std::get<int>(w.letters[r.pos]);
      Poly f = std::get<Poly>(w.letters[r.pos + 1]);
      Poly d = anchor_apply(A, g + 1, f);
      push(spliced(r.pos, {Letter{f}, Letter{g}}));
      if (!d.is_zero()) push(spliced(r.pos, {Letter{std::move(d)}}));
      return;
    }
    case Redex::SwapGen: {
      int j = std::get<int>(w.letters[r.pos]);
      int i = std::get<int>(w.letters[r.pos + 1]);
      push(spliced(r.pos, {Letter{i}, Letter{j}}));
      for (int k = 1; k <= A.rank(); ++k) {
        const Poly& c = A.structure(j + 1, i + 1, k);
        if (!c.is_zero()) push(spliced(r.pos, {Letter{c}, Letter{k - 1}}));
      }
      return;
    }
  }
}

void validate_word(const Algebroid& A, const FreeWord& w) {
  A.require_base_poly(w.prefix, "word prefix");
  for (const auto& l : w.letters) {
    if (is_gen(l)) {
      int g = std::get<int>(l);
      if (g < 0 || g >= A.rank())
        throw value_error("generator e" + std::to_string(g + 1) + " is outside rank " +
                          std::to_string(A.rank()));
    } else {
      A.require_base_poly(std::get<Poly>(l), "word letter");
    }
  }
}

constexpr std::size_t kMaxRewriteSteps = 50'000'000;

UEAElement run_engine(std::vector<FreeWord> stack, AlgebroidRef A, const RewriteChoice& pick) {
  for (const auto& w : stack) validate_word(*A, w);
  std::erase_if(stack, [](const FreeWord& w) { return w.prefix.is_zero(); });
  UEAElement out(A);
  std::size_t steps = 0;
  while (!stack.empty()) {
    FreeWord w = std::move(stack.back());
    stack.pop_back();
    auto rs = find_redexes(w);
    if (rs.empty()) {
      MultiIndex alpha(static_cast<std::size_t>(A->rank()), 0);
      for (const auto& l : w.letters) alpha[static_cast<std::size_t>(std::get<int>(l))] += 1;
      out.add_term(alpha, w.prefix);
      continue;
    }
    std::size_t choice = pick ? pick(rs.size()) : 0;
    if (choice >= rs.size())
      throw value_error("rewrite strategy chose redex " + std::to_string(choice) +
                        " of " + std::to_string(rs.size()));
    apply_redex(*A, std::move(w), rs[choice], stack);
    if (++steps > kMaxRewriteSteps)
      throw std::logic_error("normal ordering exceeded the step bound");
  }
  return out;
}

}  // namespace

UEAElement normal_form(const FreeWord& w, AlgebroidRef A, bool lift_t,
                       const RewriteChoice& pick) {
  return normal_form(std::vector<FreeWord>{w}, std::move(A), lift_t, pick);
}

UEAElement normal_form(const std::vector<FreeWord>& ws, AlgebroidRef A, bool lift_t,
                       const RewriteChoice& pick) {
  if (!A) throw value_error("normal_form needs an algebroid");
  if (lift_t) {
    if (A->has_t())
      throw value_error("the algebroid already carries t; cannot lift again");
    A = std::make_shared<const Algebroid>(adiabatic(*A));
  }
  return run_engine(ws, std::move(A), pick);
}

UEAElement multiply(const UEAElement& a, const UEAElement& b) {
  require_same(a, b);
  std::vector<FreeWord> words;
  for (const auto& [alpha, f] : a.terms()) {
    for (const auto& [beta, g] : b.terms()) {
      FreeWord w;
      w.prefix = f;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::uint32_t r = 0; r < alpha[i]; ++r) w.letters.emplace_back(static_cast<int>(i));
      if (g.is_constant())
        w.prefix *= g;
      else
        w.letters.emplace_back(g);
      for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::uint32_t r = 0; r < beta[i]; ++r) w.letters.emplace_back(static_cast<int>(i));
      words.push_back(std::move(w));
    }
  }
  return run_engine(std::move(words), a.algebroid(), {});
}

UEAElement inject_function(AlgebroidRef A, const Poly& f) {
  UEAElement e(A);
  e.add_term(MultiIndex(static_cast<std::size_t>(A->rank()), 0), f);
  return e;
}

UEAElement inject_section(AlgebroidRef A, const Section& X) {
  if (X.comp.size() != static_cast<std::size_t>(A->rank()))
    throw value_error("section has " + std::to_string(X.comp.size()) +
                      " components, expected " + std::to_string(A->rank()));
  UEAElement e(A);
  for (std::size_t i = 0; i < X.comp.size(); ++i) {
    MultiIndex alpha(X.comp.size(), 0);
    alpha[i] = 1;
    e.add_term(alpha, X.comp[i]);
  }
  return e;
}

std::vector<FreeWord> words_from_terms(AlgebroidRef A, const std::vector<ParsedTerm>& terms) {
  std::vector<FreeWord> out;
  for (const auto& t : terms) {
    FreeWord w;
    w.prefix = Poly{t.coeff};
    for (const auto& f : t.factors) {
      if (std::holds_alternative<int>(f)) {
        int g = std::get<int>(f);
        if (g < 1 || g > A->rank())
          throw value_error("generator e" + std::to_string(g) + " is outside rank " +
                            std::to_string(A->rank()));
        w.letters.emplace_back(g - 1);
      } else {
        const std::string& name = std::get<std::string>(f);
        if (!A->allows_base(name))
          throw value_error("variable '" + name + "' is not a base variable here");
        w.letters.emplace_back(Poly::variable(name));
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

UEAElement quantize(AlgebroidRef A, const Poly& fiber_poly) {
  std::vector<FreeWord> words;
  for (const auto& [alpha, h] : fiber_terms(*A, fiber_poly)) {
    std::vector<int> gens;
    Integer mult = 1, total = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (std::uint32_t r = 0; r < alpha[i]; ++r) {
        gens.push_back(static_cast<int>(i));
        mult *= (r + 1);
        total *= static_cast<unsigned>(gens.size());
      }
    }
    Poly scaled = Rational(mult, total) * h;
    do {
      FreeWord w;
      w.prefix = scaled;
      for (int g : gens) w.letters.emplace_back(g);
      words.push_back(std::move(w));
    } while (std::next_permutation(gens.begin(), gens.end()));
  }
  return run_engine(std::move(words), A, {});
}

Poly symbol(const UEAElement& a) {
  const AlgebroidRef& A = a.algebroid();
  std::map<MultiIndex, UEAElement> mono_cache;
  auto quantized_monomial = [&](const MultiIndex& alpha) -> const UEAElement& {
    auto it = mono_cache.find(alpha);
    if (it != mono_cache.end()) return it->second;
    Poly xi{Rational(1)};
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0)
        xi *= Poly::variable(A->fiber_var(static_cast<int>(i) + 1)).pow(alpha[i]);
    return mono_cache.emplace(alpha, quantize(A, xi)).first->second;
  };

  Poly res;
  UEAElement r = a;
  while (!r.is_zero()) {
    long m = r.order();
    UEAElement qtop(A);
    Poly top;
    for (const auto& [alpha, f] : r.terms()) {
      long d = 0;
      for (auto e : alpha) d += e;
      if (d != m) continue;
      Poly xi{Rational(1)};
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > 0)
          xi *= Poly::variable(A->fiber_var(static_cast<int>(i) + 1)).pow(alpha[i]);
      top += f * xi;
      qtop += quantized_monomial(alpha).scaled_left(f);
    }
    res += top;
    r -= qtop;
  }
  return res;
}

Poly principal_symbol(const UEAElement& a, long m) {
  if (a.order() > m)
    throw value_error("element has order " + std::to_string(a.order()) +
                      ", larger than " + std::to_string(m));
  const AlgebroidRef& A = a.algebroid();
  Poly out;
  for (const auto& [alpha, f] : a.terms()) {
    long d = 0;
    for (auto e : alpha) d += e;
    if (d != m) continue;
    Poly xi{Rational(1)};
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] > 0)
        xi *= Poly::variable(A->fiber_var(static_cast<int>(i) + 1)).pow(alpha[i]);
    out += f * xi;
  }
  return out;
}

Poly star(AlgebroidRef A, const Poly& f, const Poly& g) {
  if (!A) throw value_error("star needs an algebroid");
  if (A->has_t())
    throw value_error("star is defined over an algebroid without t; it lifts internally");
  auto At = std::make_shared<const Algebroid>(adiabatic(*A));
  return symbol(multiply(quantize(At, f), quantize(At, g)));
}

Poly anchor_act(const UEAElement& a, const Poly& h) {
  const AlgebroidRef& A = a.algebroid();
  A->require_base_poly(h, "argument");
  Poly out;
  for (const auto& [alpha, f] : a.terms()) {
    Poly v = h;
    for (std::size_t i = alpha.size(); i-- > 0;)
      for (std::uint32_t r = 0; r < alpha[i]; ++r)
        v = anchor_apply(*A, static_cast<int>(i) + 1, v);
    out += f * v;
  }
  return out;
}

}  // namespace algq
