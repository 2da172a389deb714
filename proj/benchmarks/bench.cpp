#include <benchmark/benchmark.h>

#include "graphbetti/betti.hpp"
#include "graphbetti/graph.hpp"
#include "graphbetti/homology.hpp"
#include "graphbetti/invariants.hpp"
#include "graphbetti/toric.hpp"

using namespace gb;

static void BM_ATable(benchmark::State& state) {
    Graph g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a_table(g).values.size());
}
BENCHMARK(BM_ATable)->Arg(8)->Arg(10)->Arg(12);

static void BM_BettiCube(benchmark::State& state) {
    Graph g = complete_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(betti_cube(g).beta.size());
}
BENCHMARK(BM_BettiCube)->Arg(8)->Arg(10);

static void BM_HomologyOracle(benchmark::State& state) {
    Graph g = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_via_homology(g, PolytopeKind::cube).beta.size());
}
BENCHMARK(BM_HomologyOracle)->Arg(3)->Arg(4)->Arg(5);

static void BM_ReducedHomology(benchmark::State& state) {
    // integral homology (Smith normal form over the boundary maps) of the
    // odd subcomplex of a cycle's cube model
    SimplicialComplex k = k_odd(cycle_graph(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(k).top_dim);
}
BENCHMARK(BM_ReducedHomology)->Arg(5)->Arg(6)->Arg(7);

static void BM_DyckCensus(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(partial_dyck_census(n, n / 2).count);
}
BENCHMARK(BM_DyckCensus)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
