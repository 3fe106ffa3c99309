#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "snb/centrality.hpp"
#include "snb/generators.hpp"
#include "snb/random.hpp"
#include "snb/sync_and_burst.hpp"

namespace snb {
namespace {

TEST(Betweenness, PathOfThree) {
    const auto c = betweenness(gen_path(3));
    EXPECT_DOUBLE_EQ(c.values[0], 0.0);
    EXPECT_DOUBLE_EQ(c.values[1], 1.0);
    EXPECT_DOUBLE_EQ(c.values[2], 0.0);
    EXPECT_NEAR(c.stdev, std::sqrt(2.0) / 3.0, 1e-15);
}

TEST(Betweenness, CycleOfFour) {
    const auto c = betweenness(gen_cycle(4));
    const auto expected = oracle::betweenness_by_path_enumeration(gen_cycle(4));
    for (std::size_t v = 0; v < 4; ++v) {
        EXPECT_DOUBLE_EQ(expected[v], 0.5);
        EXPECT_DOUBLE_EQ(c.values[v], 0.5);
    }
    EXPECT_EQ(c.stdev, 0.0);
}

TEST(Betweenness, CompleteGraphIsZero) {
    const auto c = betweenness(gen_complete(5));
    for (const double v : c.values) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(c.stdev, 0.0);
}

TEST(Betweenness, DisconnectedComponentsAreIndependent) {
    const Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const auto c = betweenness(g);
    EXPECT_DOUBLE_EQ(c.values[1], 1.0);
    EXPECT_DOUBLE_EQ(c.values[4], 1.0);
    EXPECT_DOUBLE_EQ(c.values[0], 0.0);
}

TEST(Betweenness, MatchesPathEnumerationOnRandomSmallGraphs) {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(7);  // 2..8
        std::vector<Graph::Edge> edges;
        for (Graph::Vertex a = 0; a < n; ++a)
            for (Graph::Vertex b = a + 1; b < n; ++b)
                if (rng.uniform() < 0.4) edges.push_back({a, b});
        const Graph g(n, edges);
        const auto got = betweenness(g);
        const auto want = oracle::betweenness_by_path_enumeration(g);
        ASSERT_EQ(got.values.size(), n);
        for (std::size_t v = 0; v < n; ++v) EXPECT_NEAR(got.values[v], want[v], 1e-12) << "trial " << trial;
        EXPECT_NEAR(got.stdev, oracle::pop_stdev(want), 1e-9);
    }
}

TEST(SyncParam, CapAppliesWhenSpreadIsZeroOrSmall) {
    EXPECT_EQ(compute_sync_param(gen_complete(5)), 4.0);
    EXPECT_EQ(compute_sync_param(gen_path(3)), 4.0);  // 20 / 0.4714 > 4
    EXPECT_EQ(compute_sync_param(gen_heawood()), 4.0);
}

TEST(SyncParam, StarUsesTwentyOverStdev) {
    const Graph star = gen_star(9);
    const auto brute = oracle::betweenness_by_path_enumeration(star);
    const double stdev = oracle::pop_stdev(brute);
    EXPECT_NEAR(stdev, 10.8, 1e-12);  // center 36, leaves 0
    EXPECT_NEAR(compute_sync_param(star), std::min(4.0, 20.0 / stdev), 1e-12);
    EXPECT_LT(compute_sync_param(star), 4.0);
}

}  // namespace
}  // namespace snb
