#include <benchmark/benchmark.h>

#include "xbound/exclusivity.hpp"
#include "xbound/graph.hpp"
#include "xbound/linalg.hpp"
#include "xbound/rng.hpp"
#include "xbound/theta.hpp"

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

void BM_theta_pentagon(benchmark::State& state) {
    Graph g = cycle_graph(5);
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g));
}
BENCHMARK(BM_theta_pentagon)->Unit(benchmark::kMillisecond);

void BM_theta_chsh(benchmark::State& state) {
    Graph g = complement(circulant(8, {1, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g));
}
BENCHMARK(BM_theta_chsh)->Unit(benchmark::kMillisecond);

void BM_theta_random(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 12345);
    for (auto _ : state) benchmark::DoNotOptimize(lovasz_theta(g));
}
BENCHMARK(BM_theta_random)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_certificate_chsh(benchmark::State& state) {
    Graph g = complement(circulant(8, {1, 2}));
    for (auto _ : state) benchmark::DoNotOptimize(compute_ep_certificate(g));
}
BENCHMARK(BM_certificate_chsh)->Unit(benchmark::kMillisecond);

void BM_jacobi_eigensolve(benchmark::State& state) {
    RandomStream rng(777);
    const int n = static_cast<int>(state.range(0));
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m.set(i, j, 2.0 * rng.next_open_unit() - 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_eigendecomposition(m));
}
BENCHMARK(BM_jacobi_eigensolve)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
