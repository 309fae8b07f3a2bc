#include <benchmark/benchmark.h>

#include "pcp/expr.hpp"
#include "pcp/perm.hpp"
#include "pcp/refined.hpp"
#include "pcp/tableau.hpp"
#include "pcp/wpath.hpp"

namespace {

using namespace pcp;

void BM_EnumeratePrographs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_prographs(n, threads));
}
BENCHMARK(BM_EnumeratePrographs)
    ->ArgsProduct({{4, 5, 6}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_prographs_oracle(n, 1));
}
BENCHMARK(BM_EnumerateOracle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CountConstrainedPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_constrained_paths(n));
}
BENCHMARK(BM_CountConstrainedPaths)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_LeRoundTrip(benchmark::State& state) {
  const auto all = enumerate_prographs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Prograph& p : all) benchmark::DoNotOptimize(le_inverse(le(p)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_LeRoundTrip)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_DwRoundTrip(benchmark::State& state) {
  const auto all = enumerate_prographs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Prograph& p : all) benchmark::DoNotOptimize(dw_inverse(dw(p)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_DwRoundTrip)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SchutzenbergerPrograph(benchmark::State& state) {
  const auto all = enumerate_prographs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Prograph& p : all) benchmark::DoNotOptimize(schutzenberger(p));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_SchutzenbergerPrograph)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateA2n(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_A2n(n));
}
BENCHMARK(BM_EnumerateA2n)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ExpressionRoundTrip(benchmark::State& state) {
  const auto all = enumerate_prographs(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const Prograph& p : all) {
      benchmark::DoNotOptimize(eval_expression(parse_expression(print_canonical(p))));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_ExpressionRoundTrip)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RefinedCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(refined_counts(n, 4));
}
BENCHMARK(BM_RefinedCounts)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
