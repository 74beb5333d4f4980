#include <benchmark/benchmark.h>

#include <sft/heteroclinic.hpp>
#include <sft/periodic.hpp>
#include <sft/perron.hpp>

using namespace sft;

namespace {

Graph golden_mean() {
    return make_graph({"1", "2"}, {{"a", "1", "1"}, {"b", "1", "2"}, {"c", "2", "1"}});
}

Graph dense_graph() {
    std::vector<std::string> vertices;
    std::vector<EdgeSpec> edges;
    const int n = 6;
    for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    int id = 0;
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if ((v + w) % 3 == 0 && v != w) continue;
            edges.push_back({"e" + std::to_string(id++), vertices[v], vertices[w]});
        }
    return make_graph(vertices, edges);
}

void bm_adjacency_power(benchmark::State& state) {
    const Graph g = dense_graph();
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(adjacency_power(g, n));
}
BENCHMARK(bm_adjacency_power)->Arg(50)->Arg(200)->Arg(1000);

void bm_compute_perron(benchmark::State& state) {
    const Graph g = dense_graph();
    for (auto _ : state) benchmark::DoNotOptimize(compute_perron(g));
}
BENCHMARK(bm_compute_perron);

void bm_hetero_series(benchmark::State& state) {
    const Graph g = golden_mean();
    const PerronData pd = compute_perron(g);
    const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
    const HeteroSpec spec = make_hetero_spec(g, a, a, 0, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(ratio_and_entropy_series(g, pd, spec, state.range(0)));
}
BENCHMARK(bm_hetero_series)->Arg(15)->Arg(50);

void bm_weak_star(benchmark::State& state) {
    const Graph g = golden_mean();
    const PerronData pd = compute_perron(g);
    const ShiftPoint a = make_point(g, {"a"}, {}, {"a"}, 0);
    const HeteroSpec spec = make_hetero_spec(g, a, a, 0, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(weak_star_report(g, pd, spec, 25, state.range(0)));
}
BENCHMARK(bm_weak_star)->Arg(2)->Arg(3);

void bm_enumerate_periodic(benchmark::State& state) {
    const Graph g = golden_mean();
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_periodic(g, state.range(0), 10000000));
}
BENCHMARK(bm_enumerate_periodic)->Arg(15)->Arg(20);

} // namespace

BENCHMARK_MAIN();
