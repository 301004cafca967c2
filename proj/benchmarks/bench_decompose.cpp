#include <benchmark/benchmark.h>

#include "permcomm/decompose.hpp"
#include "permcomm/group_analysis.hpp"
#include "permcomm/perm.hpp"
#include "permcomm/random.hpp"

using namespace permcomm;

// Redraw until the support is large enough for the pipeline to accept.
static Perm covered_even_perm(Rng &rng, int n) {
  const int p = *prime_in_window(n).p;
  for (;;) {
    Perm mu = random_even_perm(rng, n);
    int moved = 0;
    for (int x = 0; x < n; ++x)
      moved += mu[x] != x;
    if (moved >= p + 2)
      return mu;
  }
}

static void BM_TwoLcycleSplit(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const Perm mu = random_even_perm(rng, n);
  uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(two_lcycle_decompose(mu, n - 1, seed++));
}
BENCHMARK(BM_TwoLcycleSplit)->Arg(10)->Arg(20)->Arg(34);

static void BM_Pipeline(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(6);
  const Perm mu = covered_even_perm(rng, n);
  PipelineOptions options;
  for (auto _ : state) {
    options.seed++;
    benchmark::DoNotOptimize(run_pipeline(mu, options));
  }
}
BENCHMARK(BM_Pipeline)->Arg(10)->Arg(14)->Arg(20)->Arg(34);

static void BM_VerifyShallow(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const Certificate cert = run_pipeline(covered_even_perm(rng, n), {});
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_certificate(cert));
}
BENCHMARK(BM_VerifyShallow)->Arg(10)->Arg(34);

static void BM_ClosureOrder(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  std::string big = "(";
  for (int x = 1; x <= n; ++x)
    big += std::to_string(x) + (x == n ? ")" : " ");
  const Perm gens[] = {parse_cycles("(1 2)", n), parse_cycles(big, n)};
  for (auto _ : state)
    benchmark::DoNotOptimize(closure_order(gens, n));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(factorial_u64(n)));
}
BENCHMARK(BM_ClosureOrder)->Arg(7)->Arg(8)->Arg(9);

static void BM_CertificateJson(benchmark::State &state) {
  Rng rng(8);
  const Certificate cert = run_pipeline(covered_even_perm(rng, 10), {});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        certificate_from_json(certificate_to_json(cert)).n);
}
BENCHMARK(BM_CertificateJson);

BENCHMARK_MAIN();
