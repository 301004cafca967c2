#include <benchmark/benchmark.h>

#include "permcomm/perm.hpp"
#include "permcomm/random.hpp"

using namespace permcomm;

static void BM_Compose(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Perm a = random_perm(rng, n);
  const Perm b = random_perm(rng, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(a, b));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Compose)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Commutator(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const Perm a = random_perm(rng, n);
  const Perm b = random_perm(rng, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(commutator(a, b));
}
BENCHMARK(BM_Commutator)->Arg(10)->Arg(100)->Arg(1000);

static void BM_ParseFormatRoundTrip(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const std::string text = format_cycles(random_perm(rng, n));
  for (auto _ : state)
    benchmark::DoNotOptimize(format_cycles(parse_cycles(text, n)));
}
BENCHMARK(BM_ParseFormatRoundTrip)->Arg(10)->Arg(100);

static void BM_RandomEvenPerm(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(random_even_perm(rng, n));
}
BENCHMARK(BM_RandomEvenPerm)->Arg(10)->Arg(34);

BENCHMARK_MAIN();
