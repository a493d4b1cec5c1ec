#include <benchmark/benchmark.h>

#include "pathideal/classify.hpp"
#include "pathideal/oracles.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/rooted_tree.hpp"
#include "pathideal/simplicial_complex.hpp"

using namespace pathideal;

static void BM_EnumeratePaths(benchmark::State& state) {
    RootedTree tree = RootedTree::random(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        for (int t = 2; t <= tree.vertex_count(); ++t)
            benchmark::DoNotOptimize(tree.paths_with(t));
    }
}
BENCHMARK(BM_EnumeratePaths)->Arg(12)->Arg(24)->Arg(48);

static void BM_MinimalVertexCovers(benchmark::State& state) {
    SimplicialComplex delta =
        path_complex(RootedTree::line(static_cast<int>(state.range(0))), 2);
    for (auto _ : state) benchmark::DoNotOptimize(delta.minimal_vertex_covers());
}
BENCHMARK(BM_MinimalVertexCovers)->Arg(8)->Arg(12)->Arg(16);

static void BM_SimplicialForestCheck(benchmark::State& state) {
    SimplicialComplex delta =
        path_complex(RootedTree::random(static_cast<int>(state.range(0)), 3), 3);
    for (auto _ : state) benchmark::DoNotOptimize(delta.is_simplicial_forest());
}
BENCHMARK(BM_SimplicialForestCheck)->Arg(10)->Arg(14);

static void BM_Classify(benchmark::State& state) {
    RootedTree tree = RootedTree::random(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        for (int t = 2; t <= tree.vertex_count(); ++t)
            benchmark::DoNotOptimize(classify(tree, t));
    }
}
BENCHMARK(BM_Classify)->Arg(8)->Arg(12);

static void BM_StanleyReisnerComplex(benchmark::State& state) {
    SquarefreeMonomialIdeal ideal =
        path_ideal(RootedTree::random(static_cast<int>(state.range(0)), 9), 3);
    for (auto _ : state) benchmark::DoNotOptimize(ideal.stanley_reisner_complex());
}
BENCHMARK(BM_StanleyReisnerComplex)->Arg(10)->Arg(14)->Arg(18);

static void BM_MatroidOracle(benchmark::State& state) {
    SquarefreeMonomialIdeal ideal =
        path_ideal(RootedTree::random(static_cast<int>(state.range(0)), 9), 3);
    for (auto _ : state) benchmark::DoNotOptimize(matroid_oracle(ideal));
}
BENCHMARK(BM_MatroidOracle)->Arg(10)->Arg(12);

static void BM_ValidateInstance(benchmark::State& state) {
    RootedTree tree = RootedTree::random(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(validate_instance(tree, 3));
}
BENCHMARK(BM_ValidateInstance)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
