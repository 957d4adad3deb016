#include "algq/catalog.hpp"
#include "algq/uea.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace algq;

namespace {

FreeWord random_word(std::mt19937_64& rng, const Algebroid& A, int len) {
  FreeWord w;
  std::uniform_int_distribution<int> gen(0, A.rank() - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int i = 0; i < len; ++i) {
    if (A.base_dim() > 0 && kind(rng) == 0)
      w.letters.push_back(Poly::variable("x1") + Poly(1));
    else
      w.letters.push_back(gen(rng));
  }
  return w;
}

void BM_NormalForm(benchmark::State& state) {
  auto A = catalog_algebroid("so3");
  std::mt19937_64 rng(7);
  std::vector<FreeWord> words;
  for (int i = 0; i < 32; ++i)
    words.push_back(random_word(rng, *A, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(words[i % words.size()], A));
    ++i;
  }
}

void BM_NormalFormWithBase(benchmark::State& state) {
  auto A = catalog_algebroid("scaling-line");
  std::mt19937_64 rng(7);
  std::vector<FreeWord> words;
  for (int i = 0; i < 32; ++i)
    words.push_back(random_word(rng, *A, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(words[i % words.size()], A));
    ++i;
  }
}

Poly fiber_monomial(const Algebroid& A, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(1, A.rank());
  Poly p(1);
  for (int i = 0; i < degree; ++i) p = p * Poly::variable(A.fiber_var(gen(rng)));
  return p;
}

void BM_Star(benchmark::State& state) {
  auto A = catalog_algebroid("so3");
  std::mt19937_64 rng(11);
  Poly f = fiber_monomial(*A, static_cast<int>(state.range(0)), rng);
  Poly g = fiber_monomial(*A, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(star(A, f, g));
}

void BM_QuantizeSymbol(benchmark::State& state) {
  auto A = catalog_algebroid("so3");
  std::mt19937_64 rng(13);
  Poly f = fiber_monomial(*A, static_cast<int>(state.range(0)), rng) +
           fiber_monomial(*A, static_cast<int>(state.range(0)) - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(symbol(quantize(A, f)));
}

}  // namespace

BENCHMARK(BM_NormalForm)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_NormalFormWithBase)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_Star)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_QuantizeSymbol)->Arg(3)->Arg(4)->Arg(5);
