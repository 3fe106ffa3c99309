#include "snb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

#include "snb/error.hpp"
#include "snb/format.hpp"
#include "snb/fruchterman_reingold.hpp"
#include "snb/graph_io.hpp"
#include "snb/sync_and_burst.hpp"

namespace snb {
namespace {

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    if (v.size() % 2 == 1) return v[mid];
    const double upper = v[mid];
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

bool record_less(const RunRecord& a, const RunRecord& b) {
    return std::tie(a.graph_id, a.algorithm, a.seed) < std::tie(b.graph_id, b.algorithm, b.seed);
}

struct Job {
    const NamedGraph* graph;
    Algorithm algorithm;
    std::uint64_t seed;
};

CorpusResult run_jobs(const std::vector<Job>& jobs, const CorpusOptions& options) {
    CorpusResult result;
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const Job& job = jobs[k];
            try {
                RunRecord r = run_single(job.graph->graph, job.graph->id, job.algorithm, job.seed, options.run);
                std::lock_guard guard(lock);
                result.records.push_back(std::move(r));
            } catch (const Error& e) {
                std::lock_guard guard(lock);
                result.warnings.push_back(job.graph->id + " (" + to_string(job.algorithm) + ", seed " +
                                          std::to_string(job.seed) + "): " + e.what());
            }
        }
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(result.records.begin(), result.records.end(), record_less);
    std::sort(result.warnings.begin(), result.warnings.end());
    return result;
}

}  // namespace

std::string to_string(Algorithm a) { return a == Algorithm::SnB ? "snb" : "fr"; }

Algorithm parse_algorithm(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "snb") return Algorithm::SnB;
    if (lower == "fr") return Algorithm::FR;
    throw InvalidArgument("unknown algorithm \"" + name + "\" (expected snb or fr)");
}

RunRecord run_single(const Graph& g, const std::string& graph_id, Algorithm algorithm, std::uint64_t seed,
                     const RunConfig& config) {
    RunRecord r;
    r.graph_id = graph_id;
    r.algorithm = algorithm;
    r.seed = seed;
    r.n = g.vertex_count();
    r.m = g.edge_count();

    RunResult run;
    if (algorithm == Algorithm::SnB) {
        SnbParams p;
        p.seed = seed;
        p.total_multiplier = config.total_multiplier;
        p.sync_param = config.sync_param ? *config.sync_param : compute_sync_param(g);
        r.sync_param = p.sync_param;
        run = snb_run(g, p);
    } else {
        FrParams p;
        p.seed = seed;
        p.iterations = static_cast<std::size_t>(config.total_multiplier) * g.vertex_count();
        run = fr_run(g, p);
    }
    r.iterations = run.iterations;
    r.wall_time_total = run.loop_seconds;
    r.wall_time_per_iteration = run.iterations > 0 ? run.loop_seconds / static_cast<double>(run.iterations) : 0.0;
    r.median_iteration_time = median(run.iteration_seconds);
    r.metrics = compute_metrics(g, run.final_layout);
    r.final_layout = normalize_layout(run.final_layout);
    return r;
}

CorpusResult run_graphs(const std::vector<NamedGraph>& graphs, const CorpusOptions& options) {
    if (options.seeds_per_graph == 0) throw InvalidArgument("seeds per graph must be positive");
    if (options.algorithms.empty()) throw InvalidArgument("no algorithms selected");
    std::vector<Job> jobs;
    for (const auto& g : graphs)
        for (const Algorithm a : options.algorithms)
            for (std::size_t k = 0; k < options.seeds_per_graph; ++k) jobs.push_back({&g, a, options.base_seed + k});
    return run_jobs(jobs, options);
}

CorpusResult run_corpus(const std::filesystem::path& dir, const CorpusOptions& options) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<NamedGraph> graphs;
    std::vector<std::string> warnings;
    for (const auto& path : files) {
        try {
            graphs.push_back({path.filename().string(), load_graph(path).graph});
        } catch (const Error& e) {
            warnings.push_back(path.filename().string() + ": skipped: " + e.what());
        }
    }
    if (graphs.empty()) throw InvalidArgument("corpus " + dir.string() + " contains no readable graphs");

    CorpusResult result = run_graphs(graphs, options);
    result.warnings.insert(result.warnings.begin(), warnings.begin(), warnings.end());
    if (result.records.empty()) throw InvalidArgument("no graph in " + dir.string() + " could be laid out");
    return result;
}

std::vector<BucketSummary> bucketize(const std::vector<RunRecord>& records) {
    if (records.empty()) throw InvalidArgument("cannot bucketize an empty record set");

    // Sorting first makes every floating-point sum independent of input order.
    std::vector<const RunRecord*> sorted;
    for (const auto& r : records) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const RunRecord* a, const RunRecord* b) {
        return std::tie(a->graph_id, a->algorithm, a->seed, a->n, a->metrics.vertex_distribution,
                        a->metrics.edge_length_stdev, a->wall_time_total) <
               std::tie(b->graph_id, b->algorithm, b->seed, b->n, b->metrics.vertex_distribution,
                        b->metrics.edge_length_stdev, b->wall_time_total);
    });

    struct Acc {
        BucketSummary sum;
        std::size_t adjacent_count = 0;
        double adjacent_sum = 0.0;
    };
    std::map<std::pair<std::size_t, Algorithm>, Acc> acc;
    for (const RunRecord* r : sorted) {
        Acc& a = acc[{bucket_of(r->n), r->algorithm}];
        a.sum.count += 1;
        a.sum.crossings += static_cast<double>(r->metrics.crossings);
        a.sum.avg_crossing_angle += r->metrics.avg_crossing_angle;
        a.sum.vertex_distribution += r->metrics.vertex_distribution;
        a.sum.min_pair_distance_scaled += r->metrics.min_pair_distance_scaled;
        a.sum.edge_length_stdev += r->metrics.edge_length_stdev;
        a.sum.wall_time_per_iteration += r->wall_time_per_iteration;
        a.sum.wall_time_total += r->wall_time_total;
        if (r->metrics.avg_adjacent_angle) {
            a.adjacent_count += 1;
            a.adjacent_sum += *r->metrics.avg_adjacent_angle;
        }
    }

    std::vector<BucketSummary> out;
    for (auto& [key, a] : acc) {
        BucketSummary s = a.sum;
        const double c = static_cast<double>(s.count);
        s.bucket = key.first;
        s.algorithm = key.second;
        s.crossings /= c;
        s.avg_crossing_angle /= c;
        s.vertex_distribution /= c;
        s.min_pair_distance_scaled /= c;
        s.edge_length_stdev /= c;
        s.wall_time_per_iteration /= c;
        s.wall_time_total /= c;
        if (a.adjacent_count > 0) s.avg_adjacent_angle = a.adjacent_sum / static_cast<double>(a.adjacent_count);
        out.push_back(s);
    }
    return out;
}

void write_records_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "graph_id,algorithm,seed,n,m,iterations,sync_param,wall_time_total,wall_time_per_iteration,"
           "median_iteration_time,crossings,avg_crossing_angle,avg_adjacent_angle,edge_length_stdev,"
           "min_pair_distance_scaled,vertex_distribution,drawing_area\n";
    for (const auto& r : records) {
        const auto& mr = r.metrics;
        out << csv_field(r.graph_id) << ',' << to_string(r.algorithm) << ',' << r.seed << ',' << r.n << ',' << r.m
            << ',' << r.iterations << ',' << fmt_real(r.sync_param) << ',' << fmt_real(r.wall_time_total) << ','
            << fmt_real(r.wall_time_per_iteration) << ',' << fmt_real(r.median_iteration_time) << ','
            << mr.crossings << ',' << fmt_real(mr.avg_crossing_angle) << ',' << fmt_optional(mr.avg_adjacent_angle)
            << ',' << fmt_real(mr.edge_length_stdev) << ',' << fmt_real(mr.min_pair_distance_scaled) << ','
            << fmt_real(mr.vertex_distribution) << ',' << fmt_real(mr.drawing_area) << '\n';
    }
}

void write_buckets_csv(const std::vector<BucketSummary>& buckets, std::ostream& out) {
    out << "bucket,algorithm,count,crossings,avg_crossing_angle,avg_adjacent_angle,vertex_distribution,"
           "min_pair_distance_scaled,edge_length_stdev,wall_time_per_iteration,wall_time_total\n";
    for (const auto& b : buckets) {
        out << b.bucket << ',' << to_string(b.algorithm) << ',' << b.count << ',' << fmt_real(b.crossings) << ','
            << fmt_real(b.avg_crossing_angle) << ',' << fmt_optional(b.avg_adjacent_angle) << ','
            << fmt_real(b.vertex_distribution) << ',' << fmt_real(b.min_pair_distance_scaled) << ','
            << fmt_real(b.edge_length_stdev) << ',' << fmt_real(b.wall_time_per_iteration) << ','
            << fmt_real(b.wall_time_total) << '\n';
    }
}

}  // namespace snb
