#include "snb/render.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "json.hpp"
#include "snb/error.hpp"
#include "snb/format.hpp"

namespace snb {
namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    return fields;
}

double parse_real(const std::string& s, std::size_t line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ParseError("not a number: \"" + s + "\"", line);
    }
    if (used != s.size()) throw ParseError("not a number: \"" + s + "\"", line);
    return v;
}

}  // namespace

void write_svg(const Graph& g, const Layout& layout, std::ostream& out, const SvgOptions& options) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    const Layout unit = normalize_layout(layout);
    const double r = options.vertex_radius;
    // Pad by one radius so border vertices are drawn whole; y grows downward in SVG.
    const double lo = -2.0 * r;
    const double span = 1.0 + 4.0 * r;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"" << fmt_real(lo) << ' '
        << fmt_real(lo) << ' ' << fmt_real(span) << ' ' << fmt_real(span) << "\">\n"
        << "  <rect x=\"" << fmt_real(lo) << "\" y=\"" << fmt_real(lo) << "\" width=\"" << fmt_real(span)
        << "\" height=\"" << fmt_real(span) << "\" fill=\"white\"/>\n"
        << "  <g stroke=\"#555555\" stroke-width=\"" << fmt_real(r / 3.0) << "\">\n";
    for (const auto& e : g.edges()) {
        const Point a = unit.points[e.u];
        const Point b = unit.points[e.v];
        out << "    <line x1=\"" << fmt_real(a.x) << "\" y1=\"" << fmt_real(1.0 - a.y) << "\" x2=\"" << fmt_real(b.x)
            << "\" y2=\"" << fmt_real(1.0 - b.y) << "\"/>\n";
    }
    out << "  </g>\n  <g fill=\"#c0392b\">\n";
    for (std::size_t v = 0; v < unit.size(); ++v) {
        const Point p = unit.points[v];
        out << "    <circle cx=\"" << fmt_real(p.x) << "\" cy=\"" << fmt_real(1.0 - p.y) << "\" r=\"" << fmt_real(r)
            << "\"/>\n";
    }
    out << "  </g>\n";
    if (options.labels) {
        out << "  <g font-size=\"" << fmt_real(3.0 * r) << "\" font-family=\"sans-serif\" fill=\"black\">\n";
        for (std::size_t v = 0; v < unit.size(); ++v) {
            const Point p = unit.points[v];
            out << "    <text x=\"" << fmt_real(p.x + r) << "\" y=\"" << fmt_real(1.0 - p.y - r) << "\">"
                << xml_escape(g.label(static_cast<Graph::Vertex>(v))) << "</text>\n";
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
}

void write_layout_csv(const Graph& g, const Layout& layout, std::ostream& out) {
    if (layout.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    const Layout unit = normalize_layout(layout);
    out << "vertex,x,y\n";
    for (std::size_t v = 0; v < unit.size(); ++v)
        out << csv_field(g.label(static_cast<Graph::Vertex>(v))) << ',' << fmt_real(unit.points[v].x) << ','
            << fmt_real(unit.points[v].y) << '\n';
}

Layout read_layout_csv(const Graph& g, std::istream& in) {
    std::unordered_map<std::string, Graph::Vertex> index;
    for (Graph::Vertex v = 0; v < g.vertex_count(); ++v) index.emplace(g.label(v), v);

    Layout layout;
    layout.points.resize(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (header) {
            if (fields.size() != 3 || fields[0] != "vertex" || fields[1] != "x" || fields[2] != "y")
                throw ParseError("expected header \"vertex,x,y\"", line_no);
            header = false;
            continue;
        }
        if (fields.size() != 3) throw ParseError("expected 3 fields", line_no);
        ++rows;
        const auto it = index.find(fields[0]);
        if (it == index.end()) {
            if (rows > g.vertex_count())
                throw ParseError("layout has more rows than the graph has vertices (" +
                                 std::to_string(g.vertex_count()) + ")", line_no);
            throw ParseError("unknown vertex \"" + fields[0] + "\"", line_no);
        }
        if (seen[it->second]) throw ParseError("vertex \"" + fields[0] + "\" listed twice", line_no);
        seen[it->second] = true;
        layout.points[it->second] = {parse_real(fields[1], line_no), parse_real(fields[2], line_no)};
    }
    if (header) throw ParseError("empty layout file");
    if (rows != g.vertex_count())
        throw ParseError("layout has " + std::to_string(rows) + " rows but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
    return layout;
}

void write_trajectory_csv(const Graph& g, const std::vector<Layout>& trajectory, std::ostream& out) {
    out << "t,vertex,x,y\n";
    for (const Layout& l : trajectory) {
        if (l.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
        for (std::size_t v = 0; v < l.size(); ++v)
            out << l.iteration << ',' << csv_field(g.label(static_cast<Graph::Vertex>(v))) << ','
                << fmt_real(l.points[v].x) << ',' << fmt_real(l.points[v].y) << '\n';
    }
}

void write_curve_csv(const std::vector<MagnitudeSample>& curve, std::ostream& out) {
    out << "t,Ma,Mr,f\n";
    for (const auto& s : curve)
        out << s.t << ',' << fmt_real(s.total_attraction) << ',' << fmt_real(s.total_repulsion) << ','
            << fmt_real(s.balance) << '\n';
}

std::string metrics_to_json(const MetricsReport& report, int indent) {
    nlohmann::ordered_json j;
    j["crossings"] = report.crossings;
    j["avg_crossing_angle"] = report.avg_crossing_angle;
    j["avg_adjacent_angle"] = report.avg_adjacent_angle ? nlohmann::ordered_json(*report.avg_adjacent_angle)
                                                        : nlohmann::ordered_json(nullptr);
    j["edge_length_stdev"] = report.edge_length_stdev;
    j["min_pair_distance_scaled"] = report.min_pair_distance_scaled;
    j["vertex_distribution"] = report.vertex_distribution;
    j["drawing_area"] = report.drawing_area;
    j["degenerate_area"] = report.degenerate_area;
    auto per_vertex = nlohmann::ordered_json::array();
    for (const auto& s : report.per_vertex)
        per_vertex.push_back({{"d_star", s.nearest_vertex}, {"d_star_star", s.nearest_border}, {"r", s.radius}});
    j["per_vertex"] = std::move(per_vertex);
    return j.dump(indent);
}

void write_metrics_csv(const MetricsReport& report, std::ostream& out) {
    out << "crossings,avg_crossing_angle,avg_adjacent_angle,edge_length_stdev,min_pair_distance_scaled,"
           "vertex_distribution,drawing_area,degenerate_area\n";
    out << report.crossings << ',' << fmt_real(report.avg_crossing_angle) << ','
        << fmt_optional(report.avg_adjacent_angle) << ',' << fmt_real(report.edge_length_stdev) << ','
        << fmt_real(report.min_pair_distance_scaled) << ',' << fmt_real(report.vertex_distribution) << ','
        << fmt_real(report.drawing_area) << ',' << (report.degenerate_area ? 1 : 0) << '\n';
}

}  // namespace snb
