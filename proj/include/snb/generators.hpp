#pragma once

#include <cstddef>
#include <cstdint>

#include "snb/graph.hpp"

namespace snb {

// Queen's graph on a rows x cols board: squares are adjacent iff a queen
// can move between them in one step.
Graph gen_queen(std::size_t rows, std::size_t cols);

// Moebius ladder on 8 vertices: 8-cycle plus its 4 long diagonals.
Graph gen_wagner();

// Cubic graph with LCF notation [5,-5]^7.
Graph gen_heawood();

// Barabasi-Albert preferential attachment. Starts from a clique on
// edges_per_step vertices; every later vertex attaches edges_per_step edges,
// so m = k(n - k) + k(k - 1)/2. Requires n > edges_per_step >= 1.
Graph gen_scale_free(std::size_t n, std::size_t edges_per_step, std::uint64_t seed);

// Preferential attachment tree (one edge per step) plus exactly
// target_m - (n - 1) extra preferential edges, at most one per step.
// Requires n >= 3 and n - 1 <= target_m <= 2n - 3.
Graph gen_scale_free_target_m(std::size_t n, std::size_t target_m, std::uint64_t seed);

// Uniform random spanning tree (random attachment) plus uniformly chosen
// extra edges until m edges exist. Requires n - 1 <= m <= n(n - 1)/2.
Graph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
// K_{1,leaves}; vertex 0 is the center.
Graph gen_star(std::size_t leaves);

}  // namespace snb
