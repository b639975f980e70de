#include <vector>

#include <benchmark/benchmark.h>

#include "graphs.hpp"
#include "snsgraph/community.hpp"

namespace snsgraph {
namespace {

void BM_Louvain(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto view = bench::planted_partition(n, n / 100, 10.0, 0.8, 1);
    double q = 0.0;
    for (auto _ : state) {
        auto partition = louvain(view, {.seed = 7});
        benchmark::DoNotOptimize(partition);
        q = partition.modularity_q;
    }
    state.counters["Q"] = q;
    state.SetComplexityN(n);
}
BENCHMARK(BM_Louvain)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Modularity(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    const auto view = bench::planted_partition(n, n / 100, 10.0, 0.8, 2);
    std::vector<std::uint32_t> assignment(n);
    for (std::uint32_t i = 0; i < n; ++i) assignment[i] = i / 100;
    for (auto _ : state) benchmark::DoNotOptimize(modularity(view, assignment));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Modularity)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_MoveGain(benchmark::State& state) {
    const auto view = bench::planted_partition(10'000, 100, 10.0, 0.8, 3);
    const CommunityGraph graph(view);
    std::vector<std::uint32_t> assignment(graph.size());
    for (std::uint32_t i = 0; i < graph.size(); ++i) assignment[i] = i / 100;
    const MoveContext context(graph, assignment, 1.0);
    std::uint32_t node = 0;
    for (auto _ : state) {
        for (const auto& arc : graph.neighbors(node))
            benchmark::DoNotOptimize(context.gain(node, context.community_of(arc.target)));
        node = (node + 1) % graph.size();
    }
}
BENCHMARK(BM_MoveGain);

} // namespace
} // namespace snsgraph
