#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace snb {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Vertex positions at one iteration of a layout algorithm.
struct Layout {
    std::vector<Point> points;
    std::size_t iteration = 0;

    std::size_t size() const noexcept { return points.size(); }
};

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const noexcept { return max_x - min_x; }
    double height() const noexcept { return max_y - min_y; }
};

BoundingBox bounding_box(const std::vector<Point>& points);

// Uniform i.i.d. positions in the unit square drawn from SplitMix64(seed).
Layout random_layout(std::size_t n, std::uint64_t seed);

// Scale and translate so the bounding box starts at the origin and its
// larger side spans exactly [0, 1]; aspect ratio is preserved. Throws
// DegenerateError when all points coincide.
Layout normalize_layout(const Layout& layout);

bool all_finite(const Layout& layout) noexcept;

// Result of one full run of a layout algorithm.
struct RunResult {
    Layout final_layout;
    std::vector<Layout> trajectory;        // iteration 0 then every stride-th
    std::vector<double> iteration_seconds;  // wall time of each iteration
    std::size_t iterations = 0;
    double loop_seconds = 0.0;              // wall time of the iteration loop
};

struct RunOptions {
    // Keep every k-th layout in RunResult::trajectory; 0 keeps none.
    std::size_t trajectory_stride = 0;
    // Called with the initial layout and after every iteration.
    std::function<void(const Layout&)> observer;
};

}  // namespace snb
