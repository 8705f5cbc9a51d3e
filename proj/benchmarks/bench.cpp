#include <benchmark/benchmark.h>

#include "ivec/constructions.hpp"
#include "ivec/matrix.hpp"
#include "ivec/solver.hpp"

using namespace ivec;

static void BM_BlockColoring(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto g = random_biregular(m, 4, m, 4, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(block_interval_coloring(g));
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_BlockColoring)->Arg(8)->Arg(16)->Arg(20);

static void BM_Verify(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto g = complete_bipartite(m, m);
    auto c = block_interval_coloring(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify(g, c, Side::X, CheckMode::Interval));
    state.SetItemsProcessed(state.iterations() * g.edge_count());
}
BENCHMARK(BM_Verify)->Arg(8)->Arg(16)->Arg(32);

static void BM_ExactMinWidth(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto g = complete_bipartite(m, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_min_width(g, Side::X));
}
BENCHMARK(BM_ExactMinWidth)->Arg(3)->Arg(4)->Arg(5);

static void BM_Census(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(census_min_width(m, 3, 12));
}
BENCHMARK(BM_Census)->Arg(4)->Arg(6)->Arg(8);

static void BM_RangeColoring(benchmark::State& state) {
    auto g = even_cycle(5);
    for (auto _ : state)
        for (int t = 6; t <= 10; ++t)
            benchmark::DoNotOptimize(range_coloring(g, Side::X, t));
}
BENCHMARK(BM_RangeColoring);

BENCHMARK_MAIN();
