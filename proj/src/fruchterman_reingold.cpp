#include "snb/fruchterman_reingold.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <vector>

#include "snb/error.hpp"
#include "snb/random.hpp"

namespace snb {
namespace {

double initial_temperature(const FrParams& params) {
    return params.initial_temperature > 0.0 ? params.initial_temperature : 0.1 * params.area_side;
}

}  // namespace

std::size_t fr_iterations(const FrParams& params, std::size_t n) noexcept {
    return params.iterations > 0 ? params.iterations : 20 * n;
}

double fr_temperature(const FrParams& params, std::size_t n, std::size_t t) {
    const std::size_t total = fr_iterations(params, n);
    if (t == 0 || t > total) throw InvalidArgument("iteration outside the cooling schedule");
    return initial_temperature(params) * static_cast<double>(total - t + 1) / static_cast<double>(total);
}

RunResult fr_run(const Graph& g, const FrParams& params, const RunOptions& options) {
    using Clock = std::chrono::steady_clock;
    const std::size_t n = g.vertex_count();
    if (n < 2) throw DegenerateError("graph needs at least two vertices to lay out");
    if (!(params.area_side > 0.0)) throw InvalidArgument("area side must be positive");
    if (params.initial_temperature < 0.0) throw InvalidArgument("initial temperature must be positive");

    const double side = params.area_side;
    const double k = std::sqrt(side * side / static_cast<double>(n));
    const double k2 = k * k;
    // Stand-in distance for coincident vertices.
    const double jitter = 1e-6 * k;

    RunResult result;
    result.iterations = fr_iterations(params, n);
    result.iteration_seconds.reserve(result.iterations);

    Layout layout = random_layout(n, params.seed);
    for (Point& p : layout.points) {
        p.x *= side;
        p.y *= side;
    }
    if (options.observer) options.observer(layout);
    if (options.trajectory_stride > 0) result.trajectory.push_back(layout);

    std::vector<Point> disp(n);
    auto& pos = layout.points;
    const auto loop_start = Clock::now();
    for (std::size_t t = 1; t <= result.iterations; ++t) {
        const auto start = Clock::now();
        std::fill(disp.begin(), disp.end(), Point{});

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                double dx = pos[i].x - pos[j].x;
                double dy = pos[i].y - pos[j].y;
                double d = std::sqrt(dx * dx + dy * dy);
                if (d == 0.0) {
                    const double angle =
                        2.0 * std::numbers::pi * (static_cast<double>(mix_hash(params.seed, t, i, j) >> 11) * 0x1.0p-53);
                    dx = jitter * std::cos(angle);
                    dy = jitter * std::sin(angle);
                    d = jitter;
                }
                const double force = k2 / d;
                disp[i].x += dx / d * force;
                disp[i].y += dy / d * force;
                disp[j].x -= dx / d * force;
                disp[j].y -= dy / d * force;
            }
        }

        for (const auto& e : g.edges()) {
            const double dx = pos[e.u].x - pos[e.v].x;
            const double dy = pos[e.u].y - pos[e.v].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            if (d == 0.0) continue;
            const double force = d * d / k;
            disp[e.u].x -= dx / d * force;
            disp[e.u].y -= dy / d * force;
            disp[e.v].x += dx / d * force;
            disp[e.v].y += dy / d * force;
        }

        const double temperature = fr_temperature(params, n, t);
        for (std::size_t v = 0; v < n; ++v) {
            const double len = std::sqrt(disp[v].x * disp[v].x + disp[v].y * disp[v].y);
            if (len > 0.0) {
                const double step = std::min(len, temperature);
                pos[v].x += disp[v].x / len * step;
                pos[v].y += disp[v].y / len * step;
            }
        }
        layout.iteration = t;
        const auto stop = Clock::now();
        result.iteration_seconds.push_back(std::chrono::duration<double>(stop - start).count());

        if (!all_finite(layout)) throw NumericError("non-finite coordinate in Fruchterman-Reingold iteration " + std::to_string(t));
        if (options.observer) options.observer(layout);
        if (options.trajectory_stride > 0 && t % options.trajectory_stride == 0) result.trajectory.push_back(layout);
    }
    result.loop_seconds = std::chrono::duration<double>(Clock::now() - loop_start).count();
    result.final_layout = std::move(layout);
    return result;
}

}  // namespace snb
