#include "snb/graph_io.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snb/error.hpp"

namespace snb {
namespace {

// Collects edges keyed by external names; compacts ids in first-appearance
// order and drops self-loops and duplicates.
class GraphBuilder {
public:
    Graph::Vertex intern(const std::string& name) {
        auto [it, inserted] = ids_.try_emplace(name, static_cast<Graph::Vertex>(labels_.size()));
        if (inserted) labels_.push_back(name);
        return it->second;
    }

    bool known(const std::string& name) const { return ids_.count(name) != 0; }
    Graph::Vertex id(const std::string& name) const { return ids_.at(name); }

    void add_edge(Graph::Vertex a, Graph::Vertex b) {
        if (a == b) {
            ++stats_.self_loops;
            return;
        }
        Graph::Edge e{std::min(a, b), std::max(a, b)};
        if (!seen_.insert({e.u, e.v}).second) {
            ++stats_.duplicate_edges;
            return;
        }
        edges_.push_back(e);
    }

    std::size_t vertex_count() const { return labels_.size(); }

    ParsedGraph finish() && {
        const std::size_t n = labels_.size();
        return ParsedGraph{Graph(n, std::move(edges_), std::move(labels_)), stats_};
    }

private:
    std::unordered_map<std::string, Graph::Vertex> ids_;
    std::vector<std::string> labels_;
    std::vector<Graph::Edge> edges_;
    std::set<std::pair<Graph::Vertex, Graph::Vertex>> seen_;
    ParseStats stats_;
};

bool parse_id(std::string_view token, std::uint64_t& out) {
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

using boost::property_tree::ptree;

void reject_unsupported(const ptree& node, const std::string& where) {
    for (const auto& [name, child] : node) {
        if (name == "hyperedge" || name == "port" || name == "graph" || name == "endpoint")
            throw ParseError("unsupported GraphML element <" + name + "> inside <" + where + ">");
    }
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    GraphBuilder builder;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> fields(std::istream_iterator<std::string>{tokens},
                                        std::istream_iterator<std::string>{});
        if (fields.empty()) continue;
        if (fields.size() != 2)
            throw ParseError("expected \"u v\", got " + std::to_string(fields.size()) + " fields", line_no);

        std::uint64_t a = 0;
        std::uint64_t b = 0;
        if (!parse_id(fields[0], a) || !parse_id(fields[1], b))
            throw ParseError("vertex ids must be non-negative integers", line_no);
        const auto u = builder.intern(std::to_string(a));
        const auto v = builder.intern(std::to_string(b));
        builder.add_edge(u, v);
        if (end == text.size()) break;
    }
    if (builder.vertex_count() == 0) throw ParseError("edge list contains no edges");
    return std::move(builder).finish();
}

ParsedGraph parse_edge_list(std::istream& in) { return parse_edge_list(slurp(in)); }

ParsedGraph parse_graphml(std::string_view text) {
    ptree doc;
    {
        std::istringstream in{std::string(text)};
        try {
            boost::property_tree::read_xml(in, doc);
        } catch (const boost::property_tree::xml_parser_error& e) {
            throw ParseError("malformed GraphML: " + e.message(), e.line());
        }
    }

    const auto root = doc.get_child_optional("graphml");
    if (!root) throw ParseError("missing <graphml> root element");

    const ptree* graph = nullptr;
    for (const auto& [name, child] : *root) {
        if (name != "graph") continue;
        if (graph != nullptr) throw ParseError("GraphML document contains more than one <graph>");
        graph = &child;
    }
    if (graph == nullptr) throw ParseError("missing <graph> element");
    reject_unsupported(*graph, "graph");

    GraphBuilder builder;
    for (const auto& [name, child] : *graph) {
        if (name != "node") continue;
        reject_unsupported(child, "node");
        const auto id = child.get_optional<std::string>("<xmlattr>.id");
        if (!id) throw ParseError("<node> without id attribute");
        if (builder.known(*id)) throw ParseError("duplicate node id \"" + *id + "\"");
        builder.intern(*id);
    }
    if (builder.vertex_count() == 0) throw ParseError("GraphML graph has no nodes");

    for (const auto& [name, child] : *graph) {
        if (name != "edge") continue;
        reject_unsupported(child, "edge");
        const auto source = child.get_optional<std::string>("<xmlattr>.source");
        const auto target = child.get_optional<std::string>("<xmlattr>.target");
        if (!source || !target) throw ParseError("<edge> without source/target");
        if (!builder.known(*source)) throw ParseError("edge references unknown node \"" + *source + "\"");
        if (!builder.known(*target)) throw ParseError("edge references unknown node \"" + *target + "\"");
        builder.add_edge(builder.id(*source), builder.id(*target));
    }
    return std::move(builder).finish();
}

ParsedGraph parse_graphml(std::istream& in) { return parse_graphml(slurp(in)); }

ParsedGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    const std::string text = slurp(in);
    if (in.bad()) throw IoError("error reading " + path.string());

    const auto first = text.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
    if (first != std::string::npos && text[first] == '<') return parse_graphml(text);
    return parse_edge_list(text);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graphml(const Graph& g, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "    <node id=\"n" << v << "\"/>\n";
    std::size_t k = 0;
    for (const auto& e : g.edges())
        out << "    <edge id=\"e" << k++ << "\" source=\"n" << e.u << "\" target=\"n" << e.v << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

}  // namespace snb
