#include "snb/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <utility>

#include "snb/error.hpp"

namespace snb {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : edges_(std::move(edges)), labels_(std::move(labels)) {
    if (vertex_count == 0) throw InvalidArgument("graph must have at least one vertex");
    if (vertex_count > std::numeric_limits<Vertex>::max())
        throw InvalidArgument("vertex count exceeds the vertex index range");
    if (labels_.empty()) {
        labels_.reserve(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != vertex_count) {
        throw InvalidArgument("label count " + std::to_string(labels_.size()) +
                              " does not match vertex count " + std::to_string(vertex_count));
    }

    std::vector<std::size_t> degree(vertex_count, 0);
    for (Edge& e : edges_) {
        if (e.u >= vertex_count || e.v >= vertex_count)
            throw InvalidArgument("edge endpoint out of range");
        if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        ++degree[e.u];
        ++degree[e.v];
    }

    offsets_.assign(vertex_count + 1, 0);
    for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[fill[e.u]++] = e.v;
        adjacency_[fill[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw InvalidArgument("duplicate edge at vertex " + std::to_string(i));
    }
}

bool Graph::adjacent(Vertex a, Vertex b) const noexcept {
    if (a >= vertex_count() || b >= vertex_count()) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::uint8_t> adjacency_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> a(n * n, 0);
    for (const auto& e : g.edges()) {
        a[e.u * n + e.v] = 1;
        a[e.v * n + e.u] = 1;
    }
    return a;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::queue<Graph::Vertex> q;
    q.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (const auto w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

}  // namespace snb
