#include "snb/sync_and_burst.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "snb/centrality.hpp"
#include "snb/error.hpp"
#include "snb/random.hpp"

namespace snb {
namespace {

void require_layoutable(const Graph& g) {
    if (g.vertex_count() < 2) throw DegenerateError("graph needs at least two vertices to lay out");
    if (g.edge_count() == 0) throw DegenerateError("graph has no edges; the magnitude schedule is undefined");
}

// Writes the new positions for `prev` into `next` (same size).
void accumulate_step(const std::vector<std::uint8_t>& adjacency, const std::vector<Point>& prev,
                     double attraction_ratio, std::uint64_t seed, std::size_t t,
                     std::vector<Point>& next) {
    const std::size_t n = prev.size();
    std::fill(next.begin(), next.end(), Point{});
    const double attract = attraction_ratio - 1.0;

    for (std::size_t i = 0; i < n; ++i) {
        const Point pi = prev[i];
        const std::uint8_t* row = adjacency.data() + i * n;
        double xi = next[i].x;
        double yi = next[i].y;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = prev[j].x - pi.x;
            const double dy = prev[j].y - pi.y;
            const double d = std::sqrt(dx * dx + dy * dy);
            double ux;
            double uy;
            if (d > 0.0) {
                ux = dx / d;
                uy = dy / d;
            } else {
                const double angle =
                    2.0 * std::numbers::pi * (static_cast<double>(mix_hash(seed, t, i, j) >> 11) * 0x1.0p-53);
                ux = std::cos(angle);
                uy = std::sin(angle);
            }
            const double c = row[j] ? attract : -1.0;
            xi += c * ux;
            yi += c * uy;
            next[j].x -= c * ux;
            next[j].y -= c * uy;
        }
        next[i].x = xi;
        next[i].y = yi;
    }

    double cx = 0.0;
    double cy = 0.0;
    for (const Point& p : next) {
        cx += p.x;
        cy += p.y;
    }
    // Any NaN or infinity in `next` propagates into the centroid.
    if (!std::isfinite(cx) || !std::isfinite(cy))
        throw NumericError("non-finite coordinate in Sync-and-Burst step " + std::to_string(t));
    cx /= static_cast<double>(n);
    cy /= static_cast<double>(n);
    double radius = 0.0;
    for (Point& p : next) {
        p.x -= cx;
        p.y -= cy;
        radius = std::max(radius, std::sqrt(p.x * p.x + p.y * p.y));
    }
    if (radius > 0.0) {
        for (Point& p : next) {
            p.x /= radius;
            p.y /= radius;
        }
    }
}

}  // namespace

void validate(const SnbParams& params) {
    if (!(params.sync_param > 0.0)) throw InvalidArgument("sync parameter must be positive");
    if (params.total_multiplier == 0) throw InvalidArgument("iteration multiplier must be positive");
    if (!(params.sync_param < static_cast<double>(params.total_multiplier) - params.sync_param))
        throw InvalidArgument("sync parameter must be shorter than the burst phase (s < multiplier - s)");
    if (!(params.attraction_exponent > 0.0 && params.attraction_exponent < 1.0))
        throw InvalidArgument("attraction exponent must lie in (0, 1)");
    if (params.schedule_exponent == 0) throw InvalidArgument("schedule exponent must be positive");
    if (params.initial_magnitude && !(*params.initial_magnitude > 0.0 && std::isfinite(*params.initial_magnitude)))
        throw InvalidArgument("initial magnitude must be positive and finite");
}

MagnitudeSchedule::MagnitudeSchedule(const Graph& g, const SnbParams& params) {
    require_layoutable(g);
    validate(params);
    n_ = static_cast<double>(g.vertex_count());
    m_ = static_cast<double>(g.edge_count());
    sync_param_ = params.sync_param;
    attraction_exponent_ = params.attraction_exponent;
    schedule_exponent_ = static_cast<double>(params.schedule_exponent);
    log_initial_ = params.initial_magnitude ? std::log(*params.initial_magnitude) : -std::log(m_);
    log_turning_point_ =
        (std::log(2.0) + 2.0 * std::log(m_) - std::log(n_) - std::log(n_ - 1.0)) / (1.0 - attraction_exponent_);
    sync_iterations_ = static_cast<std::size_t>(std::ceil(sync_param_ * n_));
    total_iterations_ = static_cast<std::size_t>(params.total_multiplier) * g.vertex_count();
}

double MagnitudeSchedule::log_magnitude(std::size_t t) const {
    if (t == 0) return log_initial_;
    return log_turning_point_ +
           schedule_exponent_ * (std::log(static_cast<double>(t)) - std::log(sync_param_) - std::log(n_));
}

double MagnitudeSchedule::magnitude(std::size_t t) const { return std::exp(log_magnitude(t)); }

double MagnitudeSchedule::turning_point() const { return std::exp(log_turning_point_); }

ScheduleState MagnitudeSchedule::state(std::size_t t) const { return {t, magnitude(t), turning_point()}; }

double MagnitudeSchedule::attraction_ratio(std::size_t t) const {
    return m_ * std::exp((attraction_exponent_ - 1.0) * log_magnitude(t));
}

double magnitude(std::size_t t, const Graph& g, const SnbParams& params) {
    if (t == 0) throw InvalidArgument("magnitude is defined for t >= 1; M(0) is a parameter");
    return MagnitudeSchedule(g, params).magnitude(t);
}

double turning_point_magnitude(const Graph& g, const SnbParams& params) {
    return MagnitudeSchedule(g, params).turning_point();
}

std::vector<MagnitudeSample> total_magnitude_curve(const Graph& g, const SnbParams& params, std::size_t t_max) {
    if (t_max == 0) throw InvalidArgument("t_max must be at least 1");
    const MagnitudeSchedule schedule(g, params);
    const double n = static_cast<double>(g.vertex_count());
    const double m = static_cast<double>(g.edge_count());
    std::vector<MagnitudeSample> curve;
    curve.reserve(t_max);
    for (std::size_t t = 1; t <= t_max; ++t) {
        const double log_m = schedule.log_magnitude(t);
        MagnitudeSample s;
        s.t = t;
        s.total_attraction = 2.0 * m * m * std::exp(params.attraction_exponent * log_m);
        s.total_repulsion = n * (n - 1.0) * std::exp(log_m);
        s.balance = s.total_attraction - s.total_repulsion;
        curve.push_back(s);
    }
    return curve;
}

double compute_sync_param(const Graph& g) {
    if (g.vertex_count() < 2) throw DegenerateError("graph needs at least two vertices");
    constexpr double cap = 4.0;
    const double stdev = betweenness(g).stdev;
    if (stdev == 0.0) return cap;
    return std::min(cap, 20.0 / stdev);
}

Layout snb_step(const Graph& g, const Layout& prev, double magnitude_prev, const SnbParams& params) {
    require_layoutable(g);
    if (prev.size() != g.vertex_count()) throw InvalidArgument("layout size does not match the graph");
    if (!all_finite(prev)) throw InvalidArgument("previous layout has non-finite coordinates");
    if (!(magnitude_prev > 0.0 && std::isfinite(magnitude_prev)))
        throw InvalidArgument("previous magnitude must be positive and finite");

    const double ratio = static_cast<double>(g.edge_count()) *
                         std::exp((params.attraction_exponent - 1.0) * std::log(magnitude_prev));
    Layout next;
    next.iteration = prev.iteration + 1;
    next.points.resize(prev.size());
    accumulate_step(adjacency_matrix(g), prev.points, ratio, params.seed, next.iteration, next.points);
    return next;
}

RunResult snb_run(const Graph& g, const SnbParams& params, const RunOptions& options) {
    using Clock = std::chrono::steady_clock;
    const MagnitudeSchedule schedule(g, params);
    const auto adjacency = adjacency_matrix(g);

    RunResult result;
    result.iterations = schedule.total_iterations();
    result.iteration_seconds.reserve(result.iterations);

    Layout current = random_layout(g.vertex_count(), params.seed);
    Layout next = current;
    if (options.observer) options.observer(current);
    if (options.trajectory_stride > 0) result.trajectory.push_back(current);

    const auto loop_start = Clock::now();
    for (std::size_t t = 1; t <= result.iterations; ++t) {
        const auto start = Clock::now();
        accumulate_step(adjacency, current.points, schedule.attraction_ratio(t - 1), params.seed, t, next.points);
        next.iteration = t;
        const auto stop = Clock::now();
        result.iteration_seconds.push_back(std::chrono::duration<double>(stop - start).count());

        std::swap(current, next);
        if (options.observer) options.observer(current);
        if (options.trajectory_stride > 0 && t % options.trajectory_stride == 0) result.trajectory.push_back(current);
    }
    result.loop_seconds = std::chrono::duration<double>(Clock::now() - loop_start).count();
    result.final_layout = std::move(current);
    return result;
}

}  // namespace snb
