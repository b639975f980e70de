#include "graphs.hpp"

#include <cmath>
#include <map>
#include <random>

#include <fmt/format.h>

namespace snsgraph::bench {

namespace {

std::vector<Handle> names(std::uint32_t n) {
    std::vector<Handle> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) out.emplace_back(fmt::format("n{:06}", i));
    return out;
}

} // namespace

WeightedAdjacency planted_partition(std::uint32_t n, std::uint32_t groups, double degree, double inside,
                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::uint32_t per = n / groups;
    std::uniform_int_distribution<std::uint32_t> any(0, n - 1), member(0, per - 1);

    std::vector<std::map<std::uint32_t, double>> weights(n);
    const auto edges = static_cast<std::size_t>(n * degree / 2.0);
    for (std::size_t e = 0; e < edges; ++e) {
        const auto u = any(rng);
        const auto v = unit(rng) < inside ? (u / per) * per + member(rng) : any(rng);
        if (u == v || v >= n) continue;
        weights[u][v] += 1.0;
        weights[v][u] += 1.0;
    }
    std::vector<std::vector<Arc>> arcs(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto [v, w] : weights[u]) arcs[u].push_back({v, w});
    return WeightedAdjacency(names(n), std::move(arcs), true);
}

WeightedAdjacency strongly_connected(std::uint32_t n, std::uint32_t extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> any(0, n - 1);
    std::uniform_real_distribution<double> weight(0.5, 5.0);
    std::vector<std::map<std::uint32_t, double>> weights(n);
    for (std::uint32_t u = 0; u < n; ++u) {
        weights[u][(u + 1) % n] += weight(rng);
        for (std::uint32_t k = 0; k < extra; ++k)
            if (auto v = any(rng); v != u) weights[u][v] += weight(rng);
    }
    std::vector<std::vector<Arc>> arcs(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (auto [v, w] : weights[u]) arcs[u].push_back({v, w});
    return WeightedAdjacency(names(n), std::move(arcs), false);
}

std::vector<InteractionRecord> posts(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> length(5, 20);
    std::vector<InteractionRecord> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto& r = out[i];
        r.id = fmt::format("p{}", i);
        r.author = Handle(fmt::format("user{}", i % 500));
        const int words = length(rng);
        for (int w = 0; w < words; ++w) {
            const auto idx = static_cast<int>(std::pow(unit(rng), 3.0) * 2000.0);
            r.text += fmt::format("{}word{} ", w % 7 == 0 ? "#" : "", idx);
        }
    }
    return out;
}

} // namespace snsgraph::bench
