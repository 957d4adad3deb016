#include "algq/poly.hpp"

#include <benchmark/benchmark.h>

using namespace algq;

namespace {

Poly dense_poly(int degree) {
  Poly base = Poly::variable("x1") + Poly::variable("x2") + Poly(1);
  Poly out(1);
  for (int i = 0; i < degree; ++i) out = out * base;
  return out;
}

void BM_PolyMul(benchmark::State& state) {
  Poly p = dense_poly(static_cast<int>(state.range(0)));
  Poly q = dense_poly(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
}

void BM_PolySubstitute(benchmark::State& state) {
  Poly p = dense_poly(static_cast<int>(state.range(0)));
  std::map<std::string, Poly> bind{{"x1", Poly::variable("x2") + Poly(2)}};
  for (auto _ : state) benchmark::DoNotOptimize(p.substitute(bind));
}

}  // namespace

BENCHMARK(BM_PolyMul)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_PolySubstitute)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
