#include "snb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "snb/centrality.hpp"
#include "snb/error.hpp"

namespace snb {
namespace {

constexpr double kOrientationEps = 1e-12;
constexpr double kMinSide = 1e-9;
constexpr double kDegrees = 180.0 / std::numbers::pi;

double orient(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sign(double v) { return v > kOrientationEps ? 1 : (v < -kOrientationEps ? -1 : 0); }

// c lies within the bounding box of segment ab (used only when collinear).
bool within(const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) - kOrientationEps <= c.x && c.x <= std::max(a.x, b.x) + kOrientationEps &&
           std::min(a.y, b.y) - kOrientationEps <= c.y && c.y <= std::max(a.y, b.y) + kOrientationEps;
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    const int o1 = sign(orient(p1, p2, p3));
    const int o2 = sign(orient(p1, p2, p4));
    const int o3 = sign(orient(p3, p4, p1));
    const int o4 = sign(orient(p3, p4, p2));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within(p1, p2, p3)) return true;
    if (o2 == 0 && within(p1, p2, p4)) return true;
    if (o3 == 0 && within(p3, p4, p1)) return true;
    if (o4 == 0 && within(p3, p4, p2)) return true;
    return false;
}

struct Segment {
    Point a;
    Point b;
    Graph::Vertex u;
    Graph::Vertex v;
    double min_x;
    double max_x;
    double min_y;
    double max_y;
};

// Calls visit(s, t) for every crossing pair of edges. Edges are swept by
// their left end so only pairs with overlapping x-ranges are tested.
template <typename Visit>
void for_each_crossing(const Graph& g, const Layout& layout, Visit&& visit) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    std::vector<Segment> segs;
    segs.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        const Point a = layout.points[e.u];
        const Point b = layout.points[e.v];
        segs.push_back({a, b, e.u, e.v, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                        std::max(a.y, b.y)});
    }
    std::sort(segs.begin(), segs.end(), [](const Segment& s, const Segment& t) { return s.min_x < t.min_x; });

    // Slack so touching pairs accepted by the orientation epsilon are never pruned.
    constexpr double slack = 1e-9;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        for (std::size_t j = i + 1; j < segs.size() && segs[j].min_x <= s.max_x + slack; ++j) {
            const Segment& t = segs[j];
            if (t.min_y > s.max_y + slack || s.min_y > t.max_y + slack) continue;
            if (s.u == t.u || s.u == t.v || s.v == t.u || s.v == t.v) continue;
            if (segments_intersect(s.a, s.b, t.a, t.b)) visit(s, t);
        }
    }
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Distance from every point to its nearest other point, by a sweep over
// x-sorted order that stops once the x-gap alone exceeds the best so far.
std::vector<double> nearest_neighbor_distances(const std::vector<Point>& pts) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });

    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    for (std::size_t k = 0; k < n; ++k) {
        const Point& p = pts[order[k]];
        double& b = best[order[k]];
        for (std::size_t r = k + 1; r < n && pts[order[r]].x - p.x <= b; ++r) b = std::min(b, distance(p, pts[order[r]]));
        for (std::size_t l = k; l-- > 0 && p.x - pts[order[l]].x <= b;) b = std::min(b, distance(p, pts[order[l]]));
    }
    return best;
}

}  // namespace

std::size_t count_crossings(const Graph& g, const Layout& layout) {
    std::size_t count = 0;
    for_each_crossing(g, layout, [&](const Segment&, const Segment&) { ++count; });
    return count;
}

double avg_crossing_angle(const Graph& g, const Layout& layout) {
    std::size_t count = 0;
    double sum = 0.0;
    for_each_crossing(g, layout, [&](const Segment& s, const Segment& t) {
        const double ax = s.b.x - s.a.x;
        const double ay = s.b.y - s.a.y;
        const double bx = t.b.x - t.a.x;
        const double by = t.b.y - t.a.y;
        sum += std::atan2(std::abs(ax * by - ay * bx), std::abs(ax * bx + ay * by)) * kDegrees;
        ++count;
    });
    return count == 0 ? 90.0 : sum / static_cast<double>(count);
}

std::optional<double> avg_adjacent_angle(const Graph& g, const Layout& layout) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    std::size_t count = 0;
    double sum = 0.0;
    for (Graph::Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto nb = g.neighbors(v);
        const Point c = layout.points[v];
        for (std::size_t a = 0; a < nb.size(); ++a) {
            const double ax = layout.points[nb[a]].x - c.x;
            const double ay = layout.points[nb[a]].y - c.y;
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const double bx = layout.points[nb[b]].x - c.x;
                const double by = layout.points[nb[b]].y - c.y;
                sum += std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by) * kDegrees;
                ++count;
            }
        }
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

double edge_length_stdev(const Graph& g, const Layout& layout) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    std::vector<double> lengths;
    lengths.reserve(g.edge_count());
    for (const auto& e : g.edges()) lengths.push_back(distance(layout.points[e.u], layout.points[e.v]));
    return population_stdev(lengths);
}

double min_pair_distance_scaled(const Layout& layout) {
    if (layout.size() < 2) throw DegenerateError("minimum pair distance needs at least two vertices");
    const auto nearest = nearest_neighbor_distances(layout.points);
    return static_cast<double>(layout.size()) * *std::min_element(nearest.begin(), nearest.end());
}

VertexDistribution vertex_distribution(const Layout& layout) {
    if (layout.size() < 2) throw DegenerateError("vertex distribution needs at least two vertices");
    const Layout unit = normalize_layout(layout);
    const BoundingBox box = bounding_box(unit.points);

    VertexDistribution out;
    double width = box.width();
    double height = box.height();
    if (width < kMinSide || height < kMinSide) {
        out.degenerate_area = true;
        width = std::max(width, kMinSide);
        height = std::max(height, kMinSide);
    }
    out.area = width * height;

    const auto nearest = nearest_neighbor_distances(unit.points);
    out.per_vertex.reserve(unit.size());
    double sum_r2 = 0.0;
    for (std::size_t i = 0; i < unit.size(); ++i) {
        const Point& p = unit.points[i];
        VertexSpacing s;
        s.nearest_vertex = nearest[i];
        s.nearest_border = std::max(
            0.0, std::min({p.x - box.min_x, box.min_x + width - p.x, p.y - box.min_y, box.min_y + height - p.y}));
        s.radius = std::min(s.nearest_vertex / 2.0, s.nearest_border);
        sum_r2 += s.radius * s.radius;
        out.per_vertex.push_back(s);
    }
    out.value = std::numbers::pi * sum_r2 / out.area;
    return out;
}

MetricsReport compute_metrics(const Graph& g, const Layout& layout) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    const Layout unit = normalize_layout(layout);
    MetricsReport r;
    r.crossings = count_crossings(g, unit);
    r.avg_crossing_angle = avg_crossing_angle(g, unit);
    r.avg_adjacent_angle = avg_adjacent_angle(g, unit);
    r.edge_length_stdev = edge_length_stdev(g, unit);
    r.min_pair_distance_scaled = min_pair_distance_scaled(unit);
    VertexDistribution d = vertex_distribution(unit);
    r.vertex_distribution = d.value;
    r.drawing_area = d.area;
    r.degenerate_area = d.degenerate_area;
    r.per_vertex = std::move(d.per_vertex);
    return r;
}

}  // namespace snb
