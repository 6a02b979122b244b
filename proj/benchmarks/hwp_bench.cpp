#include <benchmark/benchmark.h>

#include "hwp/building_blocks.hpp"
#include "hwp/certificate_io.hpp"
#include "hwp/composer.hpp"
#include "hwp/named_graphs.hpp"
#include "hwp/verifier.hpp"

using namespace hwp;

namespace {

ParamRequest k2cm(int v, int m, int r) { return {Family::K2VsCm, v, m, r, v - 1 - r}; }

// Blocks are memoized, so after the first iteration this measures assembly
// and the final verification.
void BM_Solve(benchmark::State& st) {
  const ParamRequest q = k2cm(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(solve(q));
}
BENCHMARK(BM_Solve)->Args({24, 4})->Args({48, 4})->Args({48, 6})->Args({48, 8})->Unit(benchmark::kMillisecond);

void BM_Feasibility(benchmark::State& st) {
  const int v = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (int r = 0; r < v; ++r) benchmark::DoNotOptimize(feasibility(k2cm(v, 6, r)));
}
BENCHMARK(BM_Feasibility)->Arg(24)->Arg(48);

void BM_Verify(benchmark::State& st) {
  const Certificate c = solve(k2cm(static_cast<int>(st.range(0)), 4, 3));
  for (auto _ : st) benchmark::DoNotOptimize(check_certificate(c));
  st.SetItemsProcessed(st.iterations() * static_cast<long long>(c.host.size()));
}
BENCHMARK(BM_Verify)->Arg(12)->Arg(24)->Arg(48);

void BM_SerializeRoundTrip(benchmark::State& st) {
  const Certificate c = solve(k2cm(static_cast<int>(st.range(0)), 4, 3));
  for (auto _ : st) benchmark::DoNotOptimize(deserialize(serialize(c)));
}
BENCHMARK(BM_SerializeRoundTrip)->Arg(12)->Arg(48);

void BM_OracleExhaust(benchmark::State& st) {
  const Digraph k6 = complete_symmetric(6);
  const KindSpec spec = *parse_kind_spec("c6x5");
  for (auto _ : st) benchmark::DoNotOptimize(exhaustive_factorize(k6, spec, OracleMode::First));
}
BENCHMARK(BM_OracleExhaust);

void BM_WaleckiEven(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(walecki_even(m));
}
BENCHMARK(BM_WaleckiEven)->Arg(8)->Arg(16)->Arg(24);

void BM_WaleckiOdd(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(walecki_odd(m));
}
BENCHMARK(BM_WaleckiOdd)->Arg(9)->Arg(25)->Arg(49);

}  // namespace

BENCHMARK_MAIN();
