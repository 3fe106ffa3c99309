#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "snb/error.hpp"
#include "snb/generators.hpp"
#include "snb/random.hpp"
#include "snb/sync_and_burst.hpp"

namespace snb {
namespace {

Layout dyadic_layout(std::size_t n, SplitMix64& rng) {
    Layout l;
    for (std::size_t i = 0; i < n; ++i)
        l.points.push_back({static_cast<double>(rng.below(1u << 20)) * 0x1p-20,
                            static_cast<double>(rng.below(1u << 20)) * 0x1p-20});
    return l;
}

TEST(SnbStep, HandComputedThreeVertexOneEdge) {
    // Golden values: Python evaluation of the attraction/repulsion sums with
    // atan2-based angles, then centroid removal and unit-radius scaling.
    const Graph g(3, {{0, 1}});
    const Layout prev{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, 0};
    const Layout next = snb_step(g, prev, 2.0, SnbParams{});
    EXPECT_EQ(next.iteration, 1u);
    const Point expected[] = {{-0.03624228381873719, -0.541196100146197},
                              {0.418925716183827, -0.3826834323650898},
                              {-0.3826834323650898, 0.9238795325112867}};
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(next.points[i].x, expected[i].x, 1e-14) << i;
        EXPECT_NEAR(next.points[i].y, expected[i].y, 1e-14) << i;
    }
}

TEST(SnbStep, TwoVerticesReflectThroughCentroid) {
    const Graph g(2, {{0, 1}});
    for (double angle : {0.0, 0.7, 2.0, -2.5}) {
        const Layout prev{{{0.3, 0.1}, {0.3 + 2.5 * std::cos(angle), 0.1 + 2.5 * std::sin(angle)}}, 0};
        const Layout next = snb_step(g, prev, 0.01, SnbParams{});
        EXPECT_NEAR(next.points[0].x, -next.points[1].x, 1e-15);
        EXPECT_NEAR(next.points[0].y, -next.points[1].y, 1e-15);
        // attraction dominates at small M: vertex 0 is placed along +theta
        EXPECT_NEAR(next.points[0].x, std::cos(angle), 1e-12);
        EXPECT_NEAR(next.points[0].y, std::sin(angle), 1e-12);
    }
}

TEST(SnbStep, BitwiseInvariantUnderExactSimilarity) {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(30);
        const Graph g = gen_random_connected(n, std::min(n * (n - 1) / 2, n - 1 + rng.below(n)), trial);
        const Layout prev = dyadic_layout(n, rng);
        // Power-of-two scale and a dyadic offset keep every transformed
        // coordinate exactly representable.
        const double scale = std::ldexp(1.0, static_cast<int>(rng.below(21)) - 10);
        const double cx = (static_cast<double>(rng.below(1u << 20)) - (1u << 19)) * 0x1p-10;
        const double cy = (static_cast<double>(rng.below(1u << 20)) - (1u << 19)) * 0x1p-10;
        Layout moved = prev;
        for (Point& p : moved.points) p = {scale * p.x + cx, scale * p.y + cy};
        const double M = std::exp(10.0 * (rng.uniform() - 0.5));
        const Layout a = snb_step(g, prev, M, SnbParams{});
        const Layout b = snb_step(g, moved, M, SnbParams{});
        ASSERT_EQ(a.points, b.points) << "trial " << trial;
    }
}

TEST(SnbStep, InvariantUnderArbitrarySimilarityToRounding) {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + rng.below(30);
        const Graph g = gen_random_connected(n, std::min(n * (n - 1) / 2, n - 1 + rng.below(n)), trial);
        Layout prev;
        for (std::size_t i = 0; i < n; ++i) prev.points.push_back({rng.uniform(), rng.uniform()});
        const double scale = std::exp(6.0 * (rng.uniform() - 0.5));
        const double cx = 10.0 * (rng.uniform() - 0.5);
        const double cy = 10.0 * (rng.uniform() - 0.5);
        Layout moved = prev;
        for (Point& p : moved.points) p = {scale * p.x + cx, scale * p.y + cy};
        const Layout a = snb_step(g, prev, 3.0, SnbParams{});
        const Layout b = snb_step(g, moved, 3.0, SnbParams{});
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_NEAR(a.points[i].x, b.points[i].x, 1e-9);
            EXPECT_NEAR(a.points[i].y, b.points[i].y, 1e-9);
        }
    }
}

TEST(SnbStep, OutputIsCenteredWithUnitRadius) {
    SplitMix64 rng(41);
    const Graph g = gen_heawood();
    Layout prev;
    for (int i = 0; i < 14; ++i) prev.points.push_back({rng.uniform(), rng.uniform()});
    const Layout next = snb_step(g, prev, 5.0, SnbParams{});
    double cx = 0, cy = 0, radius = 0;
    for (const Point& p : next.points) {
        cx += p.x;
        cy += p.y;
        radius = std::max(radius, std::hypot(p.x, p.y));
    }
    EXPECT_NEAR(cx, 0.0, 1e-13);
    EXPECT_NEAR(cy, 0.0, 1e-13);
    EXPECT_NEAR(radius, 1.0, 1e-15);
}

TEST(SnbStep, CoincidentVerticesAreDeterministic) {
    const Graph g = gen_path(4);
    const Layout prev{{{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}, {0.1, 0.9}}, 6};
    const Layout a = snb_step(g, prev, 1.0, SnbParams{});
    const Layout b = snb_step(g, prev, 1.0, SnbParams{});
    EXPECT_EQ(a.points, b.points);
    EXPECT_TRUE(all_finite(a));
    SnbParams other;
    other.seed = 99;
    EXPECT_NE(snb_step(g, prev, 1.0, other).points, a.points);

    const Layout all_same{{{0.2, 0.2}, {0.2, 0.2}, {0.2, 0.2}, {0.2, 0.2}}, 0};
    EXPECT_TRUE(all_finite(snb_step(g, all_same, 1.0, SnbParams{})));
}

TEST(SnbStep, RejectsBadInput) {
    const Graph g = gen_path(3);
    const Layout ok{{{0, 0}, {1, 0}, {0, 1}}, 0};
    EXPECT_THROW(snb_step(g, Layout{{{0, 0}}, 0}, 1.0, SnbParams{}), InvalidArgument);
    EXPECT_THROW(snb_step(g, ok, 0.0, SnbParams{}), InvalidArgument);
    EXPECT_THROW(snb_step(g, Layout{{{0, 0}, {NAN, 0}, {0, 1}}, 0}, 1.0, SnbParams{}), InvalidArgument);
}

}  // namespace
}  // namespace snb
