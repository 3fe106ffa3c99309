#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "snb/graph.hpp"
#include "snb/layout.hpp"

namespace snb {

// Per-vertex terms of the vertex distribution D.
struct VertexSpacing {
    double nearest_vertex = 0.0;  // d*: distance to the closest other vertex
    double nearest_border = 0.0;  // d**: distance to the closest side of the drawing rectangle
    double radius = 0.0;          // r = min(d* / 2, d**)
};

struct VertexDistribution {
    double value = 0.0;  // D = pi * sum(r^2) / A
    double area = 0.0;   // A, width * height of the drawing rectangle
    bool degenerate_area = false;
    std::vector<VertexSpacing> per_vertex;
};

struct MetricsReport {
    std::size_t crossings = 0;
    double avg_crossing_angle = 90.0;
    std::optional<double> avg_adjacent_angle;  // absent when no two edges share a vertex
    double edge_length_stdev = 0.0;
    double min_pair_distance_scaled = 0.0;
    double vertex_distribution = 0.0;
    double drawing_area = 0.0;
    bool degenerate_area = false;
    std::vector<VertexSpacing> per_vertex;
};

// Pairs of edges without a shared endpoint whose segments intersect.
// Touching (an endpoint on the other segment) and collinear overlap count;
// orientation tests treat |value| <= 1e-12 as zero.
std::size_t count_crossings(const Graph& g, const Layout& layout);

// Mean acute angle in degrees between crossing edges; 90 without crossings.
double avg_crossing_angle(const Graph& g, const Layout& layout);

// Mean angle in degrees, in [0, 180], between every two edges at a shared vertex.
std::optional<double> avg_adjacent_angle(const Graph& g, const Layout& layout);

// Population standard deviation of edge lengths; 0 without edges.
double edge_length_stdev(const Graph& g, const Layout& layout);

// n times the smallest distance between two vertices.
double min_pair_distance_scaled(const Layout& layout);

// D = pi * sum(r^2) / A on the layout's own bounding rectangle rescaled so its larger side
// is 1. A zero-height (or zero-width) rectangle is clamped to 1e-9 and
// flagged. Throws DegenerateError if n < 2 or all vertices coincide.
VertexDistribution vertex_distribution(const Layout& layout);

// Normalizes the layout, then computes every metric.
MetricsReport compute_metrics(const Graph& g, const Layout& layout);

}  // namespace snb
