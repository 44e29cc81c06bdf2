#include <benchmark/benchmark.h>

#include "xbound/cliques.hpp"
#include "xbound/exclusivity.hpp"
#include "xbound/graph.hpp"
#include "xbound/independence.hpp"
#include "xbound/packing.hpp"
#include "xbound/rng.hpp"

using namespace xbound;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    RandomStream rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_open_unit() <= p) edges.emplace_back(i, j);
    return graph_from_edges(n, edges);
}

void BM_maximal_cliques_pentagon_square(benchmark::State& state) {
    Graph g = or_product(cycle_graph(5), cycle_graph(5));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_maximal_cliques_pentagon_square)->Unit(benchmark::kMillisecond);

void BM_maximal_cliques_chsh_square(benchmark::State& state) {
    Graph g = or_product(complement(circulant(8, {1, 2})), complement(circulant(8, {1, 2})));
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_maximal_cliques_chsh_square)->Unit(benchmark::kMillisecond);

void BM_packing_chsh_square(benchmark::State& state) {
    Graph g = or_product(complement(circulant(8, {1, 2})), complement(circulant(8, {1, 2})));
    for (auto _ : state) benchmark::DoNotOptimize(fractional_packing_number(g));
}
BENCHMARK(BM_packing_chsh_square)->Unit(benchmark::kMillisecond);

void BM_independence_random(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 999);
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_independence_random)->Arg(24)->Arg(40)->Arg(56)->Unit(benchmark::kMillisecond);

void BM_two_copy_pentagon(benchmark::State& state) {
    Graph g = cycle_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(two_copy_ep_bound(g));
}
BENCHMARK(BM_two_copy_pentagon)->Unit(benchmark::kMillisecond);

}  // namespace
