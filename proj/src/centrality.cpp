#include "snb/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace snb {

double population_stdev(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / n);
}

CentralityVector betweenness(const Graph& g) {
    using Vertex = Graph::Vertex;
    const std::size_t n = g.vertex_count();
    std::vector<double> cb(n, 0.0);

    std::vector<Vertex> order;  // vertices in non-decreasing distance from s
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    order.reserve(n);

    for (Vertex s = 0; s < n; ++s) {
        order.clear();
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const Vertex v = order[head];
            for (const Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    order.push_back(w);
                }
                if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
            }
        }
        // Predecessors of w are exactly its neighbors one level closer to s.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const Vertex w = *it;
            for (const Vertex v : g.neighbors(w)) {
                if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) cb[w] += delta[w];
        }
    }

    for (double& v : cb) v *= 0.5;
    CentralityVector out;
    out.stdev = population_stdev(cb);
    out.values = std::move(cb);
    return out;
}

}  // namespace snb
