#pragma once

#include <cstddef>
#include <cstdint>

#include "snb/graph.hpp"
#include "snb/layout.hpp"

namespace snb {

// Classic Fruchterman-Reingold with naive all-pairs repulsion.
struct FrParams {
    std::size_t iterations = 0;        // 0 means 20 n
    double area_side = 1.0;            // frame is area_side x area_side
    double initial_temperature = 0.0;  // 0 means 0.1 * area_side
    std::uint64_t seed = 0;
};

std::size_t fr_iterations(const FrParams& params, std::size_t n) noexcept;

// Displacement cap used in iteration t (1-based): linear decay
// T0 * (T - t + 1) / T, so the last iteration still moves by T0 / T.
double fr_temperature(const FrParams& params, std::size_t n, std::size_t t);

// Initial layout uniform in the frame from params.seed. Throws
// DegenerateError when n < 2, InvalidArgument on non-positive area or
// temperature.
RunResult fr_run(const Graph& g, const FrParams& params, const RunOptions& options = {});

}  // namespace snb
