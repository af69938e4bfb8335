#include <benchmark/benchmark.h>

#include <random>

#include "shimura/poly_mod_p.hpp"
#include "shimura/quartic_field.hpp"
#include "shimura/search.hpp"

using namespace shimura;

static void BM_Bernoulli(benchmark::State& state) {
  const auto K = QuadField::from_discriminant(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bernoulli2(K));
}
BENCHMARK(BM_Bernoulli)->Arg(33)->Arg(137)->Arg(1997);

static void BM_SearchPipeline(benchmark::State& state) {
  for (auto _ : state) {
    auto rows = prune_by_torsion(enumerate_candidates());
    benchmark::DoNotOptimize(compare_to_reference(rows));
  }
}
BENCHMARK(BM_SearchPipeline)->Unit(benchmark::kMillisecond);

static void BM_QuarticZeta(benchmark::State& state) {
  const auto K = QuarticField::create({1, -1, -3, 1, 1}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(zeta2_euler_product(K, state.range(0)));
}
BENCHMARK(BM_QuarticZeta)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_FactorModP(benchmark::State& state) {
  const u64 p = 999983;
  std::mt19937_64 rng(3);
  std::vector<u64> c(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& v : c) v = rng() % p;
  c.back() = 1;
  const PolyModP f(p, c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(f));
}
BENCHMARK(BM_FactorModP)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
