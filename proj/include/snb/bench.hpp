#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snb/graph.hpp"
#include "snb/layout.hpp"
#include "snb/metrics.hpp"

namespace snb {

enum class Algorithm { SnB, FR };

std::string to_string(Algorithm a);
// Accepts "snb" / "fr" in any case.
Algorithm parse_algorithm(const std::string& name);

struct RunRecord {
    std::string graph_id;
    Algorithm algorithm = Algorithm::SnB;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t iterations = 0;
    double sync_param = 0.0;  // SnB only
    double wall_time_total = 0.0;
    double wall_time_per_iteration = 0.0;
    double median_iteration_time = 0.0;
    MetricsReport metrics;
    Layout final_layout;
};

struct RunConfig {
    unsigned total_multiplier = 20;
    std::optional<double> sync_param;  // SnB: computed from betweenness when unset
};

// One timed run plus metrics. Only the iteration loop is timed.
RunRecord run_single(const Graph& g, const std::string& graph_id, Algorithm algorithm, std::uint64_t seed,
                     const RunConfig& config = {});

struct CorpusOptions {
    std::vector<Algorithm> algorithms{Algorithm::SnB, Algorithm::FR};
    std::size_t seeds_per_graph = 1;
    std::uint64_t base_seed = 1;  // seed k of a graph is base_seed + k
    unsigned threads = 1;
    RunConfig run;
};

struct CorpusResult {
    std::vector<RunRecord> records;  // sorted by (graph_id, algorithm, seed)
    std::vector<std::string> warnings;
};

// Runs every (file, algorithm, seed) combination for the regular files in
// `dir`. Files that cannot be parsed or laid out are skipped with a warning.
// Throws IoError if `dir` is not a directory, InvalidArgument if no file
// yields a run.
CorpusResult run_corpus(const std::filesystem::path& dir, const CorpusOptions& options);

struct NamedGraph {
    std::string id;
    Graph graph;
};

// Same as run_corpus over in-memory graphs.
CorpusResult run_graphs(const std::vector<NamedGraph>& graphs, const CorpusOptions& options);

struct BucketSummary {
    std::size_t bucket = 0;  // floor(n / 5)
    Algorithm algorithm = Algorithm::SnB;
    std::size_t count = 0;
    double crossings = 0.0;
    double avg_crossing_angle = 0.0;
    std::optional<double> avg_adjacent_angle;  // over records that define it
    double vertex_distribution = 0.0;
    double min_pair_distance_scaled = 0.0;
    double edge_length_stdev = 0.0;
    double wall_time_per_iteration = 0.0;
    double wall_time_total = 0.0;
};

constexpr std::size_t bucket_of(std::size_t n) noexcept { return n / 5; }

// Means per (bucket, algorithm), ordered by bucket then algorithm. The
// result does not depend on the order of `records`. Throws InvalidArgument
// on an empty input.
std::vector<BucketSummary> bucketize(const std::vector<RunRecord>& records);

void write_records_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_buckets_csv(const std::vector<BucketSummary>& buckets, std::ostream& out);

}  // namespace snb
