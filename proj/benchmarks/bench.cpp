#include <benchmark/benchmark.h>

#include "algebroid/branch.hpp"
#include "algebroid/oracle.hpp"
#include "algebroid/parser.hpp"
#include "algebroid/presentation.hpp"
#include "cli.hpp"

namespace {

using algebroid::NumericalSemigroup;

void BM_AperyBasis(benchmark::State& state) {
  const auto b = algebroid::parse_branch("x = t^30; y = t^42 + t^112 + t^127");
  for (auto _ : state) benchmark::DoNotOptimize(algebroid::apery_basis(b));
}
BENCHMARK(BM_AperyBasis)->Unit(benchmark::kMillisecond);

void BM_ValueSemigroup(benchmark::State& state) {
  const auto b = algebroid::parse_branch("x = t^8 + t^9; y = t^12 + t^14 + t^15");
  for (auto _ : state) benchmark::DoNotOptimize(algebroid::value_semigroup(b));
}
BENCHMARK(BM_ValueSemigroup)->Unit(benchmark::kMillisecond);

void BM_FromGenerators(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(NumericalSemigroup::from_generators({30, 42, 280, 855}));
  }
}
BENCHMARK(BM_FromGenerators);

void BM_ValuationOracle(benchmark::State& state) {
  const auto b = algebroid::parse_branch("x = t^8; y = t^12 + t^14 + t^15");
  for (auto _ : state) benchmark::DoNotOptimize(algebroid::valuation_oracle(b, state.range(0)));
}
BENCHMARK(BM_ValuationOracle)->Arg(104)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(algebroid::cli::catalog_lines(state.range(0), false));
  }
}
BENCHMARK(BM_Catalog)->Arg(40)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
