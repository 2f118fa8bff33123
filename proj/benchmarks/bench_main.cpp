#include <benchmark/benchmark.h>

#include <random>

#include "pcov/graph.hpp"
#include "pcov/island.hpp"
#include "pcov/labeling.hpp"
#include "pcov/oracle.hpp"
#include "pcov/path_cover.hpp"

namespace {

pcov::Graph make_random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return pcov::random_tree(n, rng);
}

pcov::Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i - 1, i});
    return pcov::Graph::from_edges(n, edges);
}

void BM_TreePathCover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pcov::Graph t = make_random_tree(n, 12345);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::tree_path_cover(t).p);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_TreePathCover)->Arg(100)->Arg(1000)->Arg(10000)->Complexity(benchmark::oN);

void BM_DuisRandomTree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pcov::Graph t = make_random_tree(n, 777);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::duis(t).unique);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DuisRandomTree)->Arg(100)->Arg(1000)->Arg(10000)->Complexity(benchmark::oN);

void BM_DuisPath(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pcov::Graph t = make_path(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::duis(t).unique);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_DuisPath)->Arg(100)->Arg(1000)->Arg(10000)->Complexity(benchmark::oN);

void BM_OraclePathCover(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pcov::Graph t = make_random_tree(n, 999);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::oracle_path_cover(t).p);
    }
}
BENCHMARK(BM_OraclePathCover)->DenseRange(8, 12, 2);

void BM_LambdaOfComplementPipeline(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    pcov::Graph t = make_random_tree(n, 4242);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::lambda_rho_of_complement(t, {}).lambda);
    }
}
BENCHMARK(BM_LambdaOfComplementPipeline)->Arg(64)->Arg(256)->Arg(1024);

void BM_GenerateFamilyMember(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::generate_F(seed++, max_n).tree.tree.n);
    }
}
BENCHMARK(BM_GenerateFamilyMember)->Arg(12)->Arg(64)->Arg(256);

void BM_CertifyFamilyMember(benchmark::State& state) {
    const int max_n = static_cast<int>(state.range(0));
    pcov::Graph t = pcov::generate_F(7, max_n).tree.tree;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pcov::certify_F_membership(t).has_value());
    }
}
BENCHMARK(BM_CertifyFamilyMember)->Arg(12)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
