#include "snb/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "snb/error.hpp"
#include "snb/random.hpp"

namespace snb {
namespace {

using Vertex = Graph::Vertex;
using Edge = Graph::Edge;

Edge make_edge(std::size_t a, std::size_t b) {
    return {static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
}

// Endpoint multiset for preferential attachment: a vertex appears once per
// incident edge, so a uniform draw from it is degree-proportional.
class AttachmentPool {
public:
    void add(const Edge& e) {
        endpoints_.push_back(e.u);
        endpoints_.push_back(e.v);
    }

    // Degree-proportional draw among vertices [0, existing) not in `exclude`.
    // Falls back to a uniform draw while no edges exist yet.
    Vertex draw(SplitMix64& rng, std::size_t existing, const std::vector<Vertex>& exclude) const {
        for (;;) {
            const Vertex v = endpoints_.empty()
                                 ? static_cast<Vertex>(rng.below(existing))
                                 : endpoints_[rng.below(endpoints_.size())];
            if (std::find(exclude.begin(), exclude.end(), v) == exclude.end()) return v;
        }
    }

private:
    std::vector<Vertex> endpoints_;
};

}  // namespace

Graph gen_queen(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("queen board needs positive dimensions");
    if (rows > std::numeric_limits<Vertex>::max() / cols)
        throw InvalidArgument("queen board too large for the vertex index type");

    const std::size_t n = rows * cols;
    auto index = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t from = index(r, c);
            // Enumerate only moves to later squares so each pair appears once.
            for (std::size_t c2 = c + 1; c2 < cols; ++c2) edges.push_back(make_edge(from, index(r, c2)));
            for (std::size_t r2 = r + 1; r2 < rows; ++r2) {
                const std::size_t d = r2 - r;
                edges.push_back(make_edge(from, index(r2, c)));
                if (c + d < cols) edges.push_back(make_edge(from, index(r2, c + d)));
                if (c >= d) edges.push_back(make_edge(from, index(r2, c - d)));
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph gen_wagner() {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 8; ++i) edges.push_back(make_edge(i, (i + 1) % 8));
    for (std::size_t i = 0; i < 4; ++i) edges.push_back(make_edge(i, i + 4));
    return Graph(8, std::move(edges));
}

Graph gen_heawood() {
    constexpr std::size_t n = 14;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    // LCF [5,-5]^7: even vertices jump +5; the odd -5 chords are the same set.
    for (std::size_t i = 0; i < n; i += 2) edges.push_back(make_edge(i, (i + 5) % n));
    return Graph(n, std::move(edges));
}

Graph gen_scale_free(std::size_t n, std::size_t edges_per_step, std::uint64_t seed) {
    if (edges_per_step < 1 || n <= edges_per_step)
        throw InvalidArgument("scale-free generator requires n > edges_per_step >= 1");
    SplitMix64 rng(seed);
    AttachmentPool pool;
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < edges_per_step; ++a)
        for (std::size_t b = a + 1; b < edges_per_step; ++b) {
            edges.push_back(make_edge(a, b));
            pool.add(edges.back());
        }

    std::vector<Vertex> targets;
    for (std::size_t v = edges_per_step; v < n; ++v) {
        targets.clear();
        while (targets.size() < edges_per_step) targets.push_back(pool.draw(rng, v, targets));
        for (const Vertex t : targets) {
            edges.push_back(make_edge(v, t));
            pool.add(edges.back());
        }
    }
    return Graph(n, std::move(edges));
}

Graph gen_scale_free_target_m(std::size_t n, std::size_t target_m, std::uint64_t seed) {
    if (n < 3) throw InvalidArgument("target-m scale-free generator requires n >= 3");
    if (target_m < n - 1 || target_m > 2 * n - 3)
        throw InvalidArgument("target m must lie in [n - 1, 2n - 3]");
    SplitMix64 rng(seed);

    // Vertices 2..n-1 may take one extra edge; pick exactly `extra` of them.
    const std::size_t extra = target_m - (n - 1);
    std::vector<bool> bonus(n, false);
    {
        std::vector<std::size_t> steps;
        for (std::size_t v = 2; v < n; ++v) steps.push_back(v);
        for (std::size_t k = 0; k < extra; ++k) {
            const std::size_t pick = k + rng.below(steps.size() - k);
            std::swap(steps[k], steps[pick]);
            bonus[steps[k]] = true;
        }
    }

    AttachmentPool pool;
    std::vector<Edge> edges;
    std::vector<Vertex> targets;
    for (std::size_t v = 1; v < n; ++v) {
        targets.clear();
        const std::size_t want = bonus[v] ? 2 : 1;
        while (targets.size() < want) targets.push_back(pool.draw(rng, v, targets));
        for (const Vertex t : targets) {
            edges.push_back(make_edge(v, t));
            pool.add(edges.back());
        }
    }
    return Graph(n, std::move(edges));
}

Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("graph needs at least one vertex");
    if (m + 1 < n || m > n * (n - 1) / 2)
        throw InvalidArgument("random connected graph requires n - 1 <= m <= n(n - 1)/2");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> present;
    for (std::size_t v = 1; v < n; ++v) {
        const Edge e = make_edge(v, rng.below(v));
        edges.push_back(e);
        present.insert({e.u, e.v});
    }
    while (edges.size() < m) {
        const std::size_t a = rng.below(n);
        const std::size_t b = rng.below(n);
        if (a == b) continue;
        const Edge e = make_edge(a, b);
        if (present.insert({e.u, e.v}).second) edges.push_back(e);
    }
    return Graph(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back(make_edge(i, i + 1));
    return Graph(n, std::move(edges));
}

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph gen_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) edges.push_back(make_edge(a, b));
    return Graph(n, std::move(edges));
}

Graph gen_star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.push_back(make_edge(0, i));
    return Graph(leaves + 1, std::move(edges));
}

}  // namespace snb
