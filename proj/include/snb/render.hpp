#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "snb/graph.hpp"
#include "snb/layout.hpp"
#include "snb/metrics.hpp"
#include "snb/sync_and_burst.hpp"

namespace snb {

struct SvgOptions {
    bool labels = false;
    double vertex_radius = 0.006;  // fraction of the viewport side
};

// Unit-square viewport; the layout is normalized first. One <circle> per
// vertex and one <line> per edge.
void write_svg(const Graph& g, const Layout& layout, std::ostream& out, const SvgOptions& options = {});

// "vertex,x,y" with the vertex's label; coordinates normalized to [0, 1].
void write_layout_csv(const Graph& g, const Layout& layout, std::ostream& out);

// Reads "vertex,x,y" rows (header required) and orders them by the graph's
// labels. Throws ParseError on malformed rows, unknown or repeated labels,
// or a row count different from n.
Layout read_layout_csv(const Graph& g, std::istream& in);

// "t,vertex,x,y" for every layout in the trajectory.
void write_trajectory_csv(const Graph& g, const std::vector<Layout>& trajectory, std::ostream& out);

// "t,Ma,Mr,f".
void write_curve_csv(const std::vector<MagnitudeSample>& curve, std::ostream& out);

// Field names: crossings, avg_crossing_angle, avg_adjacent_angle (null when
// absent), edge_length_stdev, min_pair_distance_scaled, vertex_distribution,
// drawing_area, degenerate_area, per_vertex[{d_star, d_star_star, r}].
std::string metrics_to_json(const MetricsReport& report, int indent = 2);

// Same scalar fields as the JSON, per_vertex omitted; header plus one row.
void write_metrics_csv(const MetricsReport& report, std::ostream& out);

}  // namespace snb
