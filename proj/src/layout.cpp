#include "snb/layout.hpp"

#include <algorithm>
#include <cmath>

#include "snb/error.hpp"
#include "snb/random.hpp"

namespace snb {

BoundingBox bounding_box(const std::vector<Point>& points) {
    if (points.empty()) return {};
    BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
    for (const Point& p : points) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

Layout random_layout(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Layout out;
    out.points.resize(n);
    for (Point& p : out.points) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    return out;
}

Layout normalize_layout(const Layout& layout) {
    const BoundingBox box = bounding_box(layout.points);
    const double side = std::max(box.width(), box.height());
    if (!(side > 0.0)) throw DegenerateError("cannot normalize a layout whose vertices all coincide");

    Layout out{layout.points, layout.iteration};
    for (Point& p : out.points) {
        p.x = (p.x - box.min_x) / side;
        p.y = (p.y - box.min_y) / side;
    }
    return out;
}

bool all_finite(const Layout& layout) noexcept {
    return std::all_of(layout.points.begin(), layout.points.end(),
                       [](const Point& p) { return std::isfinite(p.x) && std::isfinite(p.y); });
}

}  // namespace snb
