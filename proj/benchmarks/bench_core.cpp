#include <benchmark/benchmark.h>

#include "omlat/catalog.hpp"
#include "omlat/dagger_kernel.hpp"
#include "omlat/laws.hpp"

using namespace omlat;

static void BM_BuildPowerset(benchmark::State& state) {
  const std::size_t generators = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(powerset(generators));
  state.SetLabel(std::to_string(std::size_t{1} << generators) + " elements");
}
BENCHMARK(BM_BuildPowerset)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

static void BM_VerifyOrthomodular(benchmark::State& state) {
  OmlPtr lat = powerset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_orthomodular(*lat));
}
BENCHMARK(BM_VerifyOrthomodular)->Arg(4)->Arg(6)->Arg(8);

static void BM_EnumerateEndomaps(benchmark::State& state) {
  OmlPtr m = mo(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_linmaps(m, m, {m->size()}));
}
BENCHMARK(BM_EnumerateEndomaps)->Arg(2)->Arg(3);

static void BM_NaiveEndomapOracle(benchmark::State& state) {
  OmlPtr m = mo(2);
  for (auto _ : state) benchmark::DoNotOptimize(laws::naive_linmap_tables(*m, *m));
}
BENCHMARK(BM_NaiveEndomapOracle);

static void BM_AdjointComputation(benchmark::State& state) {
  OmlPtr p = powerset(static_cast<std::size_t>(state.range(0)));
  std::vector<ElemId> table(p->size());
  for (std::size_t x = 0; x < p->size(); ++x)
    table[x] = p->meet(static_cast<ElemId>(x), p->size() > 1 ? 1 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(make_linmap(p, p, table));
}
BENCHMARK(BM_AdjointComputation)->Arg(4)->Arg(6)->Arg(8);

static void BM_Factorize(benchmark::State& state) {
  OmlPtr m = mo(3);
  LinMap pi = sasaki_map(m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(factorize(pi));
}
BENCHMARK(BM_Factorize);

BENCHMARK_MAIN();
