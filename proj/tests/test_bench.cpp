#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "snb/bench.hpp"
#include "snb/error.hpp"
#include "snb/generators.hpp"
#include "snb/graph_io.hpp"

namespace snb {
namespace {

namespace fs = std::filesystem;

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("snb_bench_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

RunRecord fake(std::string id, Algorithm a, std::size_t n, double d, double crossings,
               std::optional<double> adj = 100.0) {
    RunRecord r;
    r.graph_id = std::move(id);
    r.algorithm = a;
    r.n = n;
    r.metrics.vertex_distribution = d;
    r.metrics.crossings = static_cast<std::size_t>(crossings);
    r.metrics.avg_adjacent_angle = adj;
    r.wall_time_total = d * 10;
    return r;
}

TEST(Bench, AlgorithmNames) {
    EXPECT_EQ(parse_algorithm("SnB"), Algorithm::SnB);
    EXPECT_EQ(parse_algorithm("FR"), Algorithm::FR);
    EXPECT_EQ(to_string(Algorithm::FR), "fr");
    EXPECT_THROW(parse_algorithm("kk"), InvalidArgument);
}

TEST(Bench, BucketBoundaries) {
    EXPECT_EQ(bucket_of(10), 2u);
    EXPECT_EQ(bucket_of(14), 2u);
    EXPECT_EQ(bucket_of(15), 3u);
    EXPECT_EQ(bucket_of(4), 0u);
}

TEST(Bench, SingleRun) {
    const RunRecord r = run_single(gen_wagner(), "wagner", Algorithm::SnB, 3);
    EXPECT_EQ(r.n, 8u);
    EXPECT_EQ(r.m, 12u);
    EXPECT_EQ(r.iterations, 160u);
    EXPECT_GT(r.sync_param, 0.0);
    EXPECT_GE(r.wall_time_total, 0.0);
    EXPECT_EQ(r.final_layout.size(), 8u);

    RunConfig cfg;
    cfg.total_multiplier = 5;
    const RunRecord f = run_single(gen_wagner(), "wagner", Algorithm::FR, 3, cfg);
    EXPECT_EQ(f.iterations, 40u);
    EXPECT_EQ(f.sync_param, 0.0);
}

TEST(Bench, CorpusCardinalityAndSkips) {
    TempDir dir;
    for (const auto& [name, g] : {std::pair{"a.txt", gen_cycle(6)}, std::pair{"b.graphml", gen_heawood()},
                                  std::pair{"c.txt", gen_wagner()}}) {
        std::ofstream out(dir.path() / name);
        if (std::string(name).ends_with(".graphml"))
            write_graphml(g, out);
        else
            write_edge_list(g, out);
    }
    std::ofstream(dir.path() / "broken.txt") << "1 2 3\n";

    CorpusOptions opts;
    opts.seeds_per_graph = 2;
    opts.run.total_multiplier = 9;  // admits the largest automatic sync parameter, 4
    const CorpusResult r = run_corpus(dir.path(), opts);
    EXPECT_EQ(r.records.size(), 12u);  // 3 graphs x 2 algorithms x 2 seeds
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("broken.txt"), std::string::npos);
    EXPECT_TRUE(std::is_sorted(r.records.begin(), r.records.end(), [](const RunRecord& a, const RunRecord& b) {
        return std::tie(a.graph_id, a.algorithm, a.seed) < std::tie(b.graph_id, b.algorithm, b.seed);
    }));
    EXPECT_EQ(r.records.front().seed, 1u);
}

TEST(Bench, SyncParamTooLongForMultiplierIsReported) {
    CorpusOptions opts;
    opts.algorithms = {Algorithm::SnB};
    opts.run.total_multiplier = 4;
    const auto r = run_graphs({{"c", gen_cycle(5)}}, opts);  // s = 4 on a cycle
    EXPECT_TRUE(r.records.empty());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("sync parameter"), std::string::npos);
}

TEST(Bench, CorpusErrors) {
    EXPECT_THROW(run_corpus("/nonexistent/snb/corpus", CorpusOptions{}), IoError);
    TempDir dir;
    EXPECT_THROW(run_corpus(dir.path(), CorpusOptions{}), InvalidArgument);
}

TEST(Bench, ThreadedMatchesSerialMetrics) {
    std::vector<NamedGraph> graphs{{"q", gen_queen(4, 4)}, {"w", gen_wagner()}, {"h", gen_heawood()}};
    CorpusOptions opts;
    opts.run.total_multiplier = 9;
    const auto serial = run_graphs(graphs, opts);
    opts.threads = 3;
    const auto threaded = run_graphs(graphs, opts);
    ASSERT_EQ(serial.records.size(), threaded.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        EXPECT_EQ(serial.records[i].graph_id, threaded.records[i].graph_id);
        EXPECT_EQ(serial.records[i].final_layout.points, threaded.records[i].final_layout.points);
        EXPECT_EQ(serial.records[i].metrics.vertex_distribution, threaded.records[i].metrics.vertex_distribution);
    }
}

TEST(Bucketize, HandComputedMeans) {
    std::vector<RunRecord> records{
        fake("g1", Algorithm::SnB, 10, 0.1, 1), fake("g2", Algorithm::SnB, 12, 0.2, 3),
        fake("g3", Algorithm::SnB, 14, 0.6, 5), fake("g1", Algorithm::FR, 10, 0.3, 0),
        fake("g2", Algorithm::FR, 12, 0.1, 2),  fake("g4", Algorithm::SnB, 15, 0.5, 7, std::nullopt),
        fake("g5", Algorithm::SnB, 19, 0.7, 9), fake("g4", Algorithm::FR, 15, 0.2, 4),
        fake("g6", Algorithm::FR, 3, 0.4, 0),   fake("g5", Algorithm::FR, 19, 0.4, 6, std::nullopt),
    };
    const auto b = bucketize(records);
    ASSERT_EQ(b.size(), 5u);
    // bucket 0: g6 FR
    EXPECT_EQ(b[0].bucket, 0u);
    EXPECT_EQ(b[0].algorithm, Algorithm::FR);
    EXPECT_EQ(b[0].count, 1u);
    EXPECT_DOUBLE_EQ(b[0].vertex_distribution, 0.4);
    // bucket 2 SnB: D = (0.1 + 0.2 + 0.6) / 3, crossings = 3
    EXPECT_EQ(b[1].bucket, 2u);
    EXPECT_EQ(b[1].algorithm, Algorithm::SnB);
    EXPECT_EQ(b[1].count, 3u);
    EXPECT_NEAR(b[1].vertex_distribution, 0.3, 1e-15);
    EXPECT_DOUBLE_EQ(b[1].crossings, 3.0);
    // bucket 2 FR
    EXPECT_EQ(b[2].algorithm, Algorithm::FR);
    EXPECT_NEAR(b[2].vertex_distribution, 0.2, 1e-15);
    EXPECT_DOUBLE_EQ(b[2].crossings, 1.0);
    // bucket 3 SnB: adjacent angle only from the record that has one
    EXPECT_EQ(b[3].bucket, 3u);
    EXPECT_NEAR(b[3].vertex_distribution, 0.6, 1e-15);
    EXPECT_DOUBLE_EQ(b[3].crossings, 8.0);
    ASSERT_TRUE(b[3].avg_adjacent_angle);
    EXPECT_DOUBLE_EQ(*b[3].avg_adjacent_angle, 100.0);
    // bucket 3 FR
    EXPECT_NEAR(b[4].vertex_distribution, 0.3, 1e-15);
    EXPECT_DOUBLE_EQ(b[4].wall_time_total, 3.0);
}

TEST(Bucketize, PermutationInvariantAndNonEmpty) {
    std::vector<RunRecord> records;
    for (int i = 0; i < 30; ++i)
        records.push_back(fake("g" + std::to_string(i), i % 2 ? Algorithm::FR : Algorithm::SnB,
                               5 + static_cast<std::size_t>(i % 7), 0.1 + 0.01 * i + 1e-17 * i, i % 5));
    std::ostringstream a;
    write_buckets_csv(bucketize(records), a);
    std::reverse(records.begin(), records.end());
    std::swap(records[3], records[17]);
    std::ostringstream b;
    write_buckets_csv(bucketize(records), b);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_THROW(bucketize({}), InvalidArgument);
}

TEST(Csv, RecordColumnsAndReproducibleMetrics) {
    std::vector<NamedGraph> graphs{{"name,with comma", gen_wagner()}};
    CorpusOptions opts;
    opts.algorithms = {Algorithm::SnB};
    opts.run.total_multiplier = 9;
    const auto r1 = run_graphs(graphs, opts);
    ASSERT_EQ(r1.records.size(), 1u);
    std::ostringstream out;
    write_records_csv(r1.records, out);
    std::istringstream in(out.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(header,
              "graph_id,algorithm,seed,n,m,iterations,sync_param,wall_time_total,wall_time_per_iteration,"
              "median_iteration_time,crossings,avg_crossing_angle,avg_adjacent_angle,edge_length_stdev,"
              "min_pair_distance_scaled,vertex_distribution,drawing_area");
    EXPECT_TRUE(row.starts_with("\"name,with comma\",snb,1,8,12,72,"));

    // Timing columns differ between runs; the metric columns must not.
    const auto r2 = run_graphs(graphs, opts);
    ASSERT_EQ(r2.records.size(), 1u);
    const auto& a = r1.records[0].metrics;
    const auto& b = r2.records[0].metrics;
    EXPECT_EQ(a.crossings, b.crossings);
    EXPECT_EQ(a.vertex_distribution, b.vertex_distribution);
    EXPECT_EQ(a.edge_length_stdev, b.edge_length_stdev);
    EXPECT_EQ(a.avg_adjacent_angle, b.avg_adjacent_angle);
}

}  // namespace
}  // namespace snb
