#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "snsgraph/centrality.hpp"
#include "snsgraph/error.hpp"

namespace snsgraph {
namespace {

using testing::EdgeList;

constexpr PowerIterationConfig kUndirected{.mode = CentralityMode::Undirected};

EdgeList path3() {
    EdgeList g;
    g.n = 3;
    g.edges = {{0, 1, 1}, {1, 2, 1}};
    return g;
}

EdgeList star4() {
    EdgeList g;
    g.n = 5;
    for (std::uint32_t leaf = 1; leaf < 5; ++leaf) g.edges.push_back({0, leaf, 1});
    return g;
}

EdgeList complete5() {
    EdgeList g;
    g.n = 5;
    for (std::uint32_t u = 0; u < 5; ++u)
        for (std::uint32_t v = u + 1; v < 5; ++v) g.edges.push_back({u, v, 1});
    return g;
}

TEST(Centrality, PathP3) {
    const auto r = eigenvector_centrality(path3().symmetric_view(), kUndirected);
    ASSERT_TRUE(r.converged);
    const double s = 2.0 + std::sqrt(2.0);
    EXPECT_NEAR(r.vector.scores[0], 1.0 / s, 1e-9);
    EXPECT_NEAR(r.vector.scores[1], std::sqrt(2.0) / s, 1e-9);
    EXPECT_NEAR(r.vector.scores[2], 1.0 / s, 1e-9);
    EXPECT_NEAR(r.vector.scores[0], 0.292893, 1e-6);
    EXPECT_NEAR(r.eigenvalue, std::sqrt(2.0), 1e-6);
}

TEST(Centrality, StarK14) {
    const auto r = eigenvector_centrality(star4().symmetric_view(), kUndirected);
    ASSERT_TRUE(r.converged);
    EXPECT_NEAR(r.vector.scores[0], 1.0 / 3.0, 1e-9);
    for (int leaf = 1; leaf < 5; ++leaf) EXPECT_NEAR(r.vector.scores[leaf], 1.0 / 6.0, 1e-9);
    EXPECT_LE(testing::linf(r.vector.scores, testing::dominant_eigenvector(star4().undirected_matrix())), 1e-9);
}

TEST(Centrality, CompleteK5) {
    const auto r = eigenvector_centrality(complete5().symmetric_view(), kUndirected);
    for (double s : r.vector.scores) EXPECT_NEAR(s, 0.2, 1e-12);
}

TEST(Centrality, MaxNormalization) {
    auto config = kUndirected;
    config.normalization = Normalization::Max;
    const auto r = eigenvector_centrality(star4().symmetric_view(), config);
    EXPECT_NEAR(r.vector.scores[0], 1.0, 1e-12);
    EXPECT_NEAR(r.vector.scores[1], 0.5, 1e-9);
    EXPECT_EQ(r.vector.normalization, Normalization::Max);
}

TEST(Centrality, IncomingModeMatchesTransposeOracle) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = testing::random_strongly_connected(rng, 5 + static_cast<std::uint32_t>(rng() % 40), 0.1);
        const auto r = eigenvector_centrality(g.directed_view(), {.max_iters = 100000, .tolerance = 1e-13});
        ASSERT_TRUE(r.converged);
        EXPECT_LE(testing::linf(r.vector.scores, testing::incoming_centrality_oracle(g.directed_matrix())), 1e-6);
    }
}

TEST(Centrality, UnconvergedIsReported) {
    std::mt19937_64 rng(2);
    const auto g = testing::random_strongly_connected(rng, 30, 0.1);
    const auto r = eigenvector_centrality(g.directed_view(), {.max_iters = 2});
    EXPECT_FALSE(r.converged);
    EXPECT_EQ(r.iterations, 2u);
}

TEST(Centrality, TeleportKeepsDistributionAndSpreadsMass) {
    InteractionGraph g;
    g.add_edge(Handle("a"), Handle("b"), InteractionKind::Mention);
    g.add_edge(Handle("b"), Handle("a"), InteractionKind::Mention);
    g.add_edge(Handle("c"), Handle("a"), InteractionKind::Mention);
    const auto plain = eigenvector_centrality(g, {.tolerance = 1e-14});
    const auto teleport = eigenvector_centrality(g, {.teleport = 0.15});
    EXPECT_NEAR(plain.vector.score_of(Handle("c")), 0.0, 1e-10);
    EXPECT_GT(teleport.vector.score_of(Handle("c")), 0.0);
    EXPECT_NEAR(std::accumulate(teleport.vector.scores.begin(), teleport.vector.scores.end(), 0.0), 1.0, 1e-9);
}

TEST(Centrality, Errors) {
    EXPECT_THROW(eigenvector_centrality(WeightedAdjacency{}, {}), DataError);
    InteractionGraph lonely;
    lonely.add_node(Handle("a"));
    lonely.add_node(Handle("b"));
    EXPECT_THROW(eigenvector_centrality(lonely, {}), DegenerateSpectrumError);
    EXPECT_THROW((PowerIterationConfig{.max_iters = 0}.validate()), ConfigError);
    EXPECT_THROW((PowerIterationConfig{.tolerance = 0.0}.validate()), ConfigError);
    EXPECT_THROW((PowerIterationConfig{.teleport = 1.0}.validate()), ConfigError);
    EXPECT_EQ(parse_centrality_mode("undirected"), CentralityMode::Undirected);
    EXPECT_THROW(parse_centrality_mode("sideways"), ConfigError);
}

class CentralityProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CentralityProperties, NonNegativeAndSumsToOne) {
    std::mt19937_64 rng(GetParam());
    const auto g = testing::random_strongly_connected(rng, 25, 0.15);
    const auto r = eigenvector_centrality(g.directed_view(), {});
    ASSERT_TRUE(r.converged);
    for (double s : r.vector.scores) EXPECT_GE(s, 0.0);
    EXPECT_NEAR(std::accumulate(r.vector.scores.begin(), r.vector.scores.end(), 0.0), 1.0, 1e-9);
}

TEST_P(CentralityProperties, InvariantUnderWeightScaling) {
    std::mt19937_64 rng(GetParam());
    auto g = testing::random_strongly_connected(rng, 25, 0.15);
    const auto base = eigenvector_centrality(g.directed_view(), {.tolerance = 1e-13});
    for (auto& e : g.edges) e.w *= 37.5;
    const auto scaled = eigenvector_centrality(g.directed_view(), {.tolerance = 1e-13});
    EXPECT_LE(testing::linf(base.vector.scores, scaled.vector.scores), 1e-9);
    auto ranking = [](const CentralityVector& v) {
        std::vector<Handle> out;
        for (auto& [h, score] : top_k(v, 25)) out.push_back(h);
        return out;
    };
    EXPECT_EQ(ranking(base.vector), ranking(scaled.vector));
}

TEST_P(CentralityProperties, InsertionOrderIrrelevant) {
    std::mt19937_64 rng(GetParam());
    const auto list = testing::random_strongly_connected(rng, 20, 0.2);
    std::vector<testing::WeightedEdge> edges = list.edges;
    auto build = [&](const std::vector<testing::WeightedEdge>& es) {
        InteractionGraph g;
        for (const auto& e : es)
            g.add_edge(Handle(testing::node_name(e.u)), Handle(testing::node_name(e.v)), InteractionKind::Mention,
                       1 + static_cast<std::uint64_t>(e.w));
        return eigenvector_centrality(g, {});
    };
    const auto first = build(edges);
    std::shuffle(edges.begin(), edges.end(), rng);
    EXPECT_EQ(build(edges).vector, first.vector);
}

INSTANTIATE_TEST_SUITE_P(Seeds, CentralityProperties, ::testing::Values(3, 6, 9, 12));

TEST(TopK, Examples) {
    CentralityVector v{{Handle("a"), Handle("b"), Handle("c")}, {0.5, 0.3, 0.2}, Normalization::L1};
    const auto two = top_k(v, 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], std::make_pair(Handle("a"), 0.5));
    EXPECT_EQ(two[1], std::make_pair(Handle("b"), 0.3));
    EXPECT_EQ(top_k(v, 10).size(), 3u);
    EXPECT_THROW(top_k(v, 0), ConfigError);

    CentralityVector tie{{Handle("b"), Handle("a")}, {0.5, 0.5}, Normalization::L1};
    EXPECT_EQ(top_k(tie, 1)[0].first, Handle("a"));
}

} // namespace
} // namespace snsgraph
