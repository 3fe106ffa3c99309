#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snb/error.hpp"
#include "snb/generators.hpp"

namespace snb {
namespace {

TEST(Queen, TableSizes) {
    const Graph q8 = gen_queen(8, 8);
    EXPECT_EQ(q8.vertex_count(), 64u);
    EXPECT_EQ(q8.edge_count(), 728u);
    const Graph q15 = gen_queen(15, 5);
    EXPECT_EQ(q15.vertex_count(), 75u);
    EXPECT_EQ(q15.edge_count(), 935u);
    const Graph q12 = gen_queen(1, 2);
    EXPECT_EQ(q12.vertex_count(), 2u);
    EXPECT_EQ(q12.edge_count(), 1u);
}

TEST(Queen, EdgeCountMatchesScanAndClosedForm) {
    for (std::size_t r = 1; r <= 6; ++r)
        for (std::size_t c = 1; c <= 6; ++c) {
            const Graph g = gen_queen(r, c);
            EXPECT_EQ(g.edge_count(), oracle::queen_pairs_scan(r, c)) << r << "x" << c;
            EXPECT_EQ(g.edge_count(), oracle::queen_pairs_closed_form(r, c)) << r << "x" << c;
        }
    EXPECT_EQ(oracle::queen_pairs_closed_form(8, 8), 728u);
    EXPECT_EQ(oracle::queen_pairs_closed_form(15, 5), 935u);
}

TEST(Queen, RejectsBadBoards) {
    EXPECT_THROW(gen_queen(0, 3), InvalidArgument);
    EXPECT_THROW(gen_queen(std::size_t{1} << 20, std::size_t{1} << 20), InvalidArgument);
}

TEST(Wagner, CubicMoebiusLadder) {
    const Graph g = gen_wagner();
    EXPECT_EQ(g.vertex_count(), 8u);
    EXPECT_EQ(g.edge_count(), 12u);
    for (Graph::Vertex v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 3u);
    EXPECT_EQ(oracle::girth(g), 4u);
    EXPECT_FALSE(oracle::two_colorable(g));
}

TEST(Heawood, CubicBipartiteGirthSix) {
    const Graph g = gen_heawood();
    EXPECT_EQ(g.vertex_count(), 14u);
    EXPECT_EQ(g.edge_count(), 21u);
    for (Graph::Vertex v = 0; v < 14; ++v) EXPECT_EQ(g.degree(v), 3u);
    EXPECT_EQ(oracle::girth(g), 6u);
    EXPECT_TRUE(oracle::two_colorable(g));
}

TEST(ScaleFree, EdgeCountFormulaAndConnectivity) {
    for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t n = 40;
        const Graph g = gen_scale_free(n, k, 99);
        EXPECT_EQ(g.edge_count(), k * (n - k) + k * (k - 1) / 2);
        EXPECT_TRUE(is_connected(g));
    }
    const Graph tree = gen_scale_free(5, 1, 3);
    EXPECT_EQ(tree.edge_count(), 4u);
    EXPECT_TRUE(is_connected(tree));
}

TEST(ScaleFree, Deterministic) {
    const Graph a = gen_scale_free(130, 2, 42);
    const Graph b = gen_scale_free(130, 2, 42);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, gen_scale_free(130, 2, 43));
}

TEST(ScaleFree, TargetMatchesGraph2Dimensions) {
    const Graph g = gen_scale_free_target_m(130, 190, 1);
    EXPECT_EQ(g.vertex_count(), 130u);
    EXPECT_EQ(g.edge_count(), 190u);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g, gen_scale_free_target_m(130, 190, 1));
}

TEST(ScaleFree, PreferentialAttachmentSkewsDegrees) {
    const Graph g = gen_scale_free(500, 1, 5);
    std::size_t max_degree = 0;
    for (Graph::Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
    // A uniform random tree on 500 vertices rarely exceeds degree 8.
    EXPECT_GT(max_degree, 15u);
}

TEST(ScaleFree, RejectsBadParameters) {
    EXPECT_THROW(gen_scale_free(3, 3, 0), InvalidArgument);
    EXPECT_THROW(gen_scale_free(3, 0, 0), InvalidArgument);
    EXPECT_THROW(gen_scale_free_target_m(10, 8, 0), InvalidArgument);
    EXPECT_THROW(gen_scale_free_target_m(10, 18, 0), InvalidArgument);
}

TEST(RandomConnected, ConnectedWithExactEdgeCount) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen_random_connected(30, 45, seed);
        EXPECT_EQ(g.edge_count(), 45u);
        EXPECT_TRUE(is_connected(g));
    }
    EXPECT_EQ(gen_random_connected(6, 15, 1).edge_count(), 15u);
    EXPECT_THROW(gen_random_connected(6, 4, 1), InvalidArgument);
    EXPECT_THROW(gen_random_connected(6, 16, 1), InvalidArgument);
}

TEST(SmallFamilies, Sizes) {
    EXPECT_EQ(gen_path(4).edge_count(), 3u);
    EXPECT_EQ(gen_cycle(5).edge_count(), 5u);
    EXPECT_EQ(gen_complete(5).edge_count(), 10u);
    EXPECT_EQ(gen_star(9).vertex_count(), 10u);
    EXPECT_EQ(gen_star(9).degree(0), 9u);
}

}  // namespace
}  // namespace snb
