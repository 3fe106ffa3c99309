#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "snb/graph.hpp"
#include "snb/layout.hpp"

namespace snb {

// Tunables of a Sync-and-Burst run.
//
// The run performs total_multiplier * n iterations; the repulsion magnitude
// M(t) reaches the turning point at t = sync_param * n, so sync_param is the
// sync-phase length per vertex and total_multiplier - sync_param the burst
// length. Attraction between adjacent vertices has magnitude
// m * M(t)^attraction_exponent; repulsion between every pair has magnitude M(t).
struct SnbParams {
    double sync_param = 4.0;
    unsigned total_multiplier = 20;
    double attraction_exponent = 0.9;
    unsigned schedule_exponent = 10;
    std::uint64_t seed = 0;
    std::optional<double> initial_magnitude;  // M(0); 1/m when unset
};

// Throws InvalidArgument unless 0 < sync_param < total_multiplier - sync_param,
// 0 < attraction_exponent < 1, schedule_exponent >= 1 and M(0) > 0.
void validate(const SnbParams& params);

struct ScheduleState {
    std::size_t t = 0;
    double magnitude = 0.0;
    double turning_point_magnitude = 0.0;
};

// The uniform magnitude M(t) of a graph, evaluated in log space:
//
//   M(t)   = M(t_p) * (t / (s n))^k
//   M(t_p) = (2 m^2 / (n (n - 1)))^(1 / (1 - a))
//
// With the default exponents (a = 0.9, k = 10) this is
// M(t) = (2 t m^2 / (s n^2 (n - 1)))^10. M(0) is the configured start value.
class MagnitudeSchedule {
public:
    // Throws DegenerateError when n < 2 or m == 0.
    MagnitudeSchedule(const Graph& g, const SnbParams& params);

    double log_magnitude(std::size_t t) const;
    double magnitude(std::size_t t) const;
    double log_turning_point() const noexcept { return log_turning_point_; }
    double turning_point() const;
    ScheduleState state(std::size_t t) const;

    // Ratio of the per-pair attraction to the per-pair repulsion magnitude,
    // m * M(t)^(a - 1); the only schedule quantity the layout update needs.
    double attraction_ratio(std::size_t t) const;

    std::size_t sync_iterations() const noexcept { return sync_iterations_; }
    std::size_t total_iterations() const noexcept { return total_iterations_; }

private:
    double n_;
    double m_;
    double sync_param_;
    double attraction_exponent_;
    double schedule_exponent_;
    double log_initial_;
    double log_turning_point_;
    std::size_t sync_iterations_;
    std::size_t total_iterations_;
};

double magnitude(std::size_t t, const Graph& g, const SnbParams& params);
double turning_point_magnitude(const Graph& g, const SnbParams& params = {});

struct MagnitudeSample {
    std::size_t t = 0;
    double total_attraction = 0.0;  // 2 M(t)^a m^2
    double total_repulsion = 0.0;   // M(t) n (n - 1)
    double balance = 0.0;           // total_attraction - total_repulsion
};

// Totals for t = 1..t_max. balance > 0 marks the sync phase, < 0 the burst.
std::vector<MagnitudeSample> total_magnitude_curve(const Graph& g, const SnbParams& params,
                                                   std::size_t t_max);

// s = min(4, 20 / stdev of betweenness); 4 when the stdev is zero.
double compute_sync_param(const Graph& g);

// One iteration. Every vertex's new position is the sum, over all other
// vertices j, of the unit vector towards j in `prev` weighted by
// m M^a (if adjacent) minus M, where M = magnitude_prev. The result is
// recentred on its centroid and scaled to unit maximum radius, which does
// not change any later direction. The returned layout has
// iteration = prev.iteration + 1.
//
// Coincident pairs get a direction hashed from (seed, t, i, j).
// Throws NumericError if a non-finite coordinate is produced.
Layout snb_step(const Graph& g, const Layout& prev, double magnitude_prev, const SnbParams& params);

// Random initial layout from params.seed, then total_multiplier * n steps
// with M(0) as configured. Throws DegenerateError when n < 2 or m == 0.
RunResult snb_run(const Graph& g, const SnbParams& params, const RunOptions& options = {});

}  // namespace snb
