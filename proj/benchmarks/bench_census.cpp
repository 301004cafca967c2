#include <benchmark/benchmark.h>

#include "permcomm/counting.hpp"
#include "permcomm/perm.hpp"
#include "permcomm/small_group.hpp"
#include "permcomm/t2.hpp"

using namespace permcomm;

static SmallGroup alternating(int n) {
  std::vector<Perm> gens{parse_cycles("(1 2 3)", n)};
  if (n > 3) {
    std::string big = "(";
    for (int x = (n % 2 == 0) ? 2 : 1; x <= n; ++x)
      big += std::to_string(x) + (x == n ? ")" : " ");
    gens.push_back(parse_cycles(big, n));
  }
  return build_small_group(gens, n);
}

static void BM_BuildSmallGroup(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(alternating(n).order);
}
BENCHMARK(BM_BuildSmallGroup)->Arg(5)->Arg(6);

static void BM_GeneratingPairs(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const SmallGroup G = alternating(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(generating_pairs(G).count);
}
BENCHMARK(BM_GeneratingPairs)->Arg(5)->Arg(6);

static void BM_PairCensus(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  const SmallGroup G = alternating(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(pair_census(G).t2_systems);
}
BENCHMARK(BM_PairCensus)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_PartitionTable(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(PartitionTable(n).P(n));
}
BENCHMARK(BM_PartitionTable)->Arg(100)->Arg(500);

static void BM_ClassCount(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(class_count_alternating(n));
}
BENCHMARK(BM_ClassCount)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
