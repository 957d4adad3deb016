#include "algq/catalog.hpp"
#include "algq/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace algq;

namespace {

ReducedKernel random_kernel(const GroupoidRef& G, std::mt19937_64& rng) {
  ReducedKernel k = ReducedKernel::scalar(G);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  for (int g = 0; g < G->arrows(); ++g) {
    RatMatrix m(1, 1);
    m.at(0, 0) = Rational(num(rng), den(rng));
    k.set(g, std::move(m));
  }
  return k;
}

void BM_Convolve(benchmark::State& state) {
  auto G = std::make_shared<const FiniteGroupoid>(
      pair_groupoid(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(3);
  auto k1 = random_kernel(G, rng);
  auto k2 = random_kernel(G, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(k1, k2));
}

void BM_FamilyRoundTrip(benchmark::State& state) {
  auto G = catalog_groupoid("z3-on-6");
  std::mt19937_64 rng(5);
  auto k = random_kernel(G, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_from_family(family_from_kernel(k)));
}

void BM_ComposeFamilies(benchmark::State& state) {
  auto G = catalog_groupoid("z3-on-6");
  std::mt19937_64 rng(9);
  auto P = family_from_kernel(random_kernel(G, rng));
  auto Q = family_from_kernel(random_kernel(G, rng));
  for (auto _ : state) benchmark::DoNotOptimize(compose_families(P, Q));
}

}  // namespace

BENCHMARK(BM_Convolve)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(BM_FamilyRoundTrip);
BENCHMARK(BM_ComposeFamilies);
