#include <benchmark/benchmark.h>

#include <random>

#include "scindex/analytics.hpp"
#include "scindex/dim_expr.hpp"
#include "scindex/scaling.hpp"
#include "scindex/table1.hpp"

namespace {

using namespace scindex;

CitationVector random_vector(std::size_t papers, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Heavy-tailed counts, roughly what a real portfolio looks like.
  std::lognormal_distribution<double> dist(2.0, 1.5);
  std::vector<std::uint64_t> counts(papers);
  for (auto& c : counts) c = static_cast<std::uint64_t>(dist(rng));
  return CitationVector{std::move(counts)};
}

void BM_CitationVectorConstruct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(state.range(0)));
  for (auto& c : counts) c = rng() % 10000;
  for (auto _ : state) {
    CitationVector v{counts};
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CitationVectorConstruct)->Range(8, 1 << 16);

void BM_ComputeAll(benchmark::State& state) {
  const CitationVector v = random_vector(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_all(v));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComputeAll)->Range(8, 1 << 16);

void BM_HIndex(benchmark::State& state) {
  const CitationVector v = random_vector(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(h_index(v));
}
BENCHMARK(BM_HIndex)->Range(8, 1 << 16);

void BM_GIndex(benchmark::State& state) {
  const CitationVector v = random_vector(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(g_index(v));
}
BENCHMARK(BM_GIndex)->Range(8, 1 << 16);

void BM_VerifyDimension(benchmark::State& state) {
  const CitationVector v = random_vector(static_cast<std::size_t>(state.range(0)), 5);
  const auto& desc = find_indicator("i_E");
  for (auto _ : state) benchmark::DoNotOptimize(verify_dimension(desc, v, kDefaultLambdas));
}
BENCHMARK(BM_VerifyDimension)->Range(8, 1 << 12);

void BM_ParseAndEvalDimExpr(benchmark::State& state) {
  const SymbolTable symbols = indicator_symbols();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_dim_expr(parse_dim_expr("(eta*i^2*P)^(1/3) + h + g/P*z"), symbols));
  }
}
BENCHMARK(BM_ParseAndEvalDimExpr);

void BM_Table1Correlations(benchmark::State& state) {
  const AnalyticsTable t = table1::printed();
  for (auto _ : state) benchmark::DoNotOptimize(pearson_matrix(t, table1::columns()));
}
BENCHMARK(BM_Table1Correlations);

}  // namespace

BENCHMARK_MAIN();
