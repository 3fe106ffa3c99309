#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace snb {

// Immutable undirected simple graph over dense vertex ids [0, n).
//
// Edges are stored as given (each normalized so u < v) and mirrored into a
// CSR adjacency with sorted neighbor lists. External vertex names from the
// input file are kept as labels for reporting only.
class Graph {
public:
    using Vertex = std::uint32_t;

    struct Edge {
        Vertex u;
        Vertex v;
        auto operator<=>(const Edge&) const = default;
    };

    // Throws InvalidArgument on n == 0, self-loops, duplicate edges,
    // endpoints outside [0, n), or a label count different from n.
    // Empty labels default to the decimal vertex index.
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex a, Vertex b) const noexcept;

    const std::string& label(Vertex v) const noexcept { return labels_[v]; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    // Structural equality: same n and the same edge sequence. Labels are
    // presentation only and are ignored.
    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::string> labels_;
};

// Row-major n x n 0/1 matrix of g; used by the O(n^2) layout kernels.
std::vector<std::uint8_t> adjacency_matrix(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace snb
