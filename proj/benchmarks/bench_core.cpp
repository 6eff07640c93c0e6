#include <benchmark/benchmark.h>

#include "coarse/builders.hpp"
#include "coarse/distance_graph.hpp"
#include "coarse/generators.hpp"
#include "coarse/separator.hpp"
#include "coarse/treewidth.hpp"

using namespace coarse;

static void BM_bfs_hops(benchmark::State& state) {
    Graph g = make_grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(g.bfs_hops(0));
}
BENCHMARK(BM_bfs_hops)->Arg(8)->Arg(16)->Arg(32);

static void BM_find_separator_exact(benchmark::State& state) {
    Graph g = make_grid(5, static_cast<int>(state.range(0)));
    WeightFn mu = WeightFn::uniform(g.num_vertices());
    Budgets budgets;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_separator(g, mu, 2, 1, SearchMode::exact, budgets));
}
BENCHMARK(BM_find_separator_exact)->Arg(4)->Arg(6)->Arg(8);

static void BM_find_separator_greedy(benchmark::State& state) {
    Graph g = make_grid(5, static_cast<int>(state.range(0)));
    WeightFn mu = WeightFn::uniform(g.num_vertices());
    Budgets budgets;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_separator(g, mu, 2, 1, SearchMode::greedy, budgets));
}
BENCHMARK(BM_find_separator_greedy)->Arg(4)->Arg(6)->Arg(8);

static void BM_decompose_simple(benchmark::State& state) {
    Graph g = make_path(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_simple(g, make_builder_params(1, 1)));
}
BENCHMARK(BM_decompose_simple)->Arg(16)->Arg(64)->Arg(256);

static void BM_decompose_round(benchmark::State& state) {
    Graph g = make_grid(4, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_round(g, make_builder_params(2, 1)));
}
BENCHMARK(BM_decompose_round)->Arg(3)->Arg(4)->Arg(5);

static void BM_distance_graph(benchmark::State& state) {
    Graph g = make_grid(8, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_distance_graph(g, static_cast<int>(state.range(0)), 3, true));
}
BENCHMARK(BM_distance_graph)->Arg(1)->Arg(2)->Arg(3);

static void BM_exact_treewidth(benchmark::State& state) {
    Graph g = make_grid(3, static_cast<int>(state.range(0)));
    Budgets budgets;
    for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g, budgets));
}
BENCHMARK(BM_exact_treewidth)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
