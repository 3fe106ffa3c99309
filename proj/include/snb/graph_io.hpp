#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "snb/graph.hpp"

namespace snb {

struct ParseStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

struct ParsedGraph {
    Graph graph;
    ParseStats dropped;
};

// Whitespace-separated "u v" pairs, one per line. '#' starts a comment.
// Ids are arbitrary non-negative integers, compacted to [0, n) in order of
// first appearance. Duplicate edges and self-loops are dropped and counted.
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph parse_edge_list(std::istream& in);

// Minimal GraphML: one <graph> with <node id=..> and <edge source=.. target=..>
// elements. Direction attributes are ignored; hyperedges, ports and nested
// graphs are rejected.
ParsedGraph parse_graphml(std::string_view text);
ParsedGraph parse_graphml(std::istream& in);

// Dispatches on content: a document starting with '<' is GraphML, anything
// else is an edge list. Throws IoError if the file cannot be read.
ParsedGraph load_graph(const std::filesystem::path& path);

void write_edge_list(const Graph& g, std::ostream& out);
void write_graphml(const Graph& g, std::ostream& out);

}  // namespace snb
