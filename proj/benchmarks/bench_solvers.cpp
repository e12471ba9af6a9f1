#include <benchmark/benchmark.h>

#include "tfsub/generators.hpp"
#include "tfsub/hypergraph.hpp"
#include "tfsub/invariants.hpp"
#include "tfsub/io.hpp"
#include "tfsub/pipeline.hpp"
#include "tfsub/subdivision.hpp"

using namespace tfsub;

static void BM_RandomMtf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_random_mtf(n, ++seed));
}
BENCHMARK(BM_RandomMtf)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

static void BM_ChromaticNumber(benchmark::State& state) {
  const Graph g = gen_random_mtf(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(12)->Arg(24)->Arg(36);

static void BM_Grotzsch(benchmark::State& state) {
  const Graph g = gen_mycielski(gen_cycle(5));
  for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_Grotzsch);

static void BM_MaxIndependentSet(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 3, 10, 11);
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g));
}
BENCHMARK(BM_MaxIndependentSet)->Arg(20)->Arg(40)->Arg(60);

static void BM_Transversality(benchmark::State& state) {
  const auto h = neighborhood_hypergraph(gen_random_mtf(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(transversality(h));
}
BENCHMARK(BM_Transversality)->Arg(16)->Arg(32)->Arg(48);

static void BM_MaxDswSize(benchmark::State& state) {
  const auto g = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(static_cast<std::size_t>(state.range(0)), true, 1));
  const auto h = neighborhood_hypergraph(g.graph);
  for (auto _ : state) benchmark::DoNotOptimize(max_dsw_size(h));
}
BENCHMARK(BM_MaxDswSize)->Arg(4)->Arg(5)->Arg(6);

static void BM_InducedK4Search(benchmark::State& state) {
  const Graph host = gen_random_mtf(static_cast<std::size_t>(state.range(0)), 3);
  const Graph k4 = gen_complete(4);
  for (auto _ : state) benchmark::DoNotOptimize(find_subdivision(k4, host, true));
}
BENCHMARK(BM_InducedK4Search)->Arg(10)->Arg(14)->Arg(18);

static void BM_PipelineSynthetic(benchmark::State& state) {
  const auto s = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(static_cast<std::size_t>(state.range(0)), true, 9));
  const Graph k3 = gen_complete(3);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(s.graph, k3));
}
BENCHMARK(BM_PipelineSynthetic)->Arg(5)->Arg(6);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = gen_gnp(static_cast<std::size_t>(state.range(0)), 5, 10, 2);
  for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
