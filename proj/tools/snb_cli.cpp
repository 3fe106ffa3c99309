#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snb/bench.hpp"
#include "snb/error.hpp"
#include "snb/fruchterman_reingold.hpp"
#include "snb/generators.hpp"
#include "snb/graph_io.hpp"
#include "snb/metrics.hpp"
#include "snb/render.hpp"
#include "snb/sync_and_burst.hpp"

namespace fs = std::filesystem;
using namespace snb;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kNumeric = 3 };

fs::path default_out_dir() {
    if (const char* env = std::getenv("SNB_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

std::ofstream open_output(const fs::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
    out.close();
    if (!out) throw IoError("error writing " + path.string());
}

// Writes via `emit` to `path`, or to stdout when the path is empty or "-".
template <typename Emit>
void write_to(const std::string& path, Emit&& emit) {
    if (path.empty() || path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream out = open_output(path);
    emit(out);
    close_output(out, path);
}

Graph load(const std::string& path) {
    ParsedGraph parsed = load_graph(path);
    if (parsed.dropped.duplicate_edges > 0 || parsed.dropped.self_loops > 0)
        std::cerr << "warning: " << path << ": dropped " << parsed.dropped.duplicate_edges << " duplicate edge(s) and "
                  << parsed.dropped.self_loops << " self-loop(s)\n";
    return std::move(parsed.graph);
}

struct LayoutArgs {
    std::string input;
    std::string algorithm = "snb";
    std::uint64_t seed = 0;
    unsigned multiplier = 20;
    std::optional<double> sync_param;
    std::string out_dir;
    std::size_t trajectory = 0;
    bool labels = false;
};

int cmd_layout(const LayoutArgs& a) {
    const Algorithm alg = parse_algorithm(a.algorithm);
    const Graph g = load(a.input);

    RunOptions opts;
    opts.trajectory_stride = a.trajectory;
    RunResult run;
    if (alg == Algorithm::SnB) {
        SnbParams p;
        p.seed = a.seed;
        p.total_multiplier = a.multiplier;
        p.sync_param = a.sync_param ? *a.sync_param : compute_sync_param(g);
        validate(p);
        run = snb_run(g, p, opts);
        std::cerr << "sync parameter " << p.sync_param << ", " << run.iterations << " iterations\n";
    } else {
        FrParams p;
        p.seed = a.seed;
        p.iterations = static_cast<std::size_t>(a.multiplier) * g.vertex_count();
        run = fr_run(g, p, opts);
        std::cerr << run.iterations << " iterations\n";
    }

    const fs::path dir = a.out_dir.empty() ? default_out_dir() : fs::path(a.out_dir);
    const std::string stem = fs::path(a.input).stem().string() + "_" + to_string(alg);
    SvgOptions svg;
    svg.labels = a.labels;

    const fs::path svg_path = dir / (stem + ".svg");
    std::ofstream svg_out = open_output(svg_path);
    write_svg(g, run.final_layout, svg_out, svg);
    close_output(svg_out, svg_path);

    const fs::path csv_path = dir / (stem + ".csv");
    std::ofstream csv_out = open_output(csv_path);
    write_layout_csv(g, run.final_layout, csv_out);
    close_output(csv_out, csv_path);
    std::cout << svg_path.string() << '\n' << csv_path.string() << '\n';

    if (a.trajectory > 0) {
        const fs::path traj_path = dir / (stem + "_trajectory.csv");
        std::ofstream traj_out = open_output(traj_path);
        write_trajectory_csv(g, run.trajectory, traj_out);
        close_output(traj_out, traj_path);
        std::cout << traj_path.string() << '\n';
    }
    return kOk;
}

struct MetricsArgs {
    std::string graph;
    std::string layout;
    std::string format = "json";
    std::string output;
};

int cmd_metrics(const MetricsArgs& a) {
    const Graph g = load(a.graph);
    std::ifstream in(a.layout);
    if (!in) throw IoError("cannot open " + a.layout);
    const Layout layout = read_layout_csv(g, in);
    const MetricsReport report = compute_metrics(g, layout);
    write_to(a.output, [&](std::ostream& out) {
        if (a.format == "json")
            out << metrics_to_json(report) << '\n';
        else
            write_metrics_csv(report, out);
    });
    return kOk;
}

struct CurveArgs {
    std::string graph;
    std::size_t t_max = 0;
    unsigned multiplier = 20;
    std::optional<double> sync_param;
    std::string output;
};

int cmd_curve(const CurveArgs& a) {
    const Graph g = load(a.graph);
    SnbParams p;
    p.total_multiplier = a.multiplier;
    p.sync_param = a.sync_param ? *a.sync_param : compute_sync_param(g);
    validate(p);
    const std::size_t t_max = a.t_max > 0 ? a.t_max : static_cast<std::size_t>(a.multiplier) * g.vertex_count();
    const auto curve = total_magnitude_curve(g, p, t_max);
    write_to(a.output, [&](std::ostream& out) { write_curve_csv(curve, out); });
    return kOk;
}

struct GenerateArgs {
    std::string name;
    std::vector<std::size_t> args;
    std::uint64_t seed = 1;
    std::optional<std::size_t> edges_per_step;
    std::optional<std::size_t> target_m;
    std::string format = "edgelist";
    std::string output;
};

const std::map<std::string, std::string>& generator_usage() {
    static const std::map<std::string, std::string> usage{
        {"queen", "queen ROWS COLS"},
        {"wagner", "wagner"},
        {"heawood", "heawood"},
        {"scale-free", "scale-free N [--edges-per-step K | --target-m M] [--seed S]"},
        {"random-connected", "random-connected N M [--seed S]"},
        {"path", "path N"},
        {"cycle", "cycle N"},
        {"complete", "complete N"},
        {"star", "star LEAVES"},
    };
    return usage;
}

std::string generator_list() {
    std::string s;
    for (const auto& [name, usage] : generator_usage()) s += "\n  " + usage;
    return s;
}

Graph generate(const GenerateArgs& a) {
    const auto it = generator_usage().find(a.name);
    if (it == generator_usage().end())
        throw InvalidArgument("unknown generator \"" + a.name + "\"; available:" + generator_list());
    auto need = [&](std::size_t count) {
        if (a.args.size() != count) throw InvalidArgument("usage: generate " + it->second);
    };
    const std::string& n = a.name;
    if (n == "queen") {
        need(2);
        return gen_queen(a.args[0], a.args[1]);
    }
    if (n == "wagner") {
        need(0);
        return gen_wagner();
    }
    if (n == "heawood") {
        need(0);
        return gen_heawood();
    }
    if (n == "scale-free") {
        need(1);
        if (a.edges_per_step && a.target_m) throw InvalidArgument("--edges-per-step and --target-m are exclusive");
        if (a.target_m) return gen_scale_free_target_m(a.args[0], *a.target_m, a.seed);
        return gen_scale_free(a.args[0], a.edges_per_step.value_or(1), a.seed);
    }
    if (n == "random-connected") {
        need(2);
        return gen_random_connected(a.args[0], a.args[1], a.seed);
    }
    need(1);
    if (n == "path") return gen_path(a.args[0]);
    if (n == "cycle") return gen_cycle(a.args[0]);
    if (n == "complete") return gen_complete(a.args[0]);
    return gen_star(a.args[0]);
}

int cmd_generate(const GenerateArgs& a) {
    const Graph g = generate(a);
    write_to(a.output, [&](std::ostream& out) {
        if (a.format == "graphml")
            write_graphml(g, out);
        else
            write_edge_list(g, out);
    });
    std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    return kOk;
}

struct BenchArgs {
    std::string dir;
    std::vector<std::string> algorithms{"snb", "fr"};
    std::size_t seeds = 1;
    std::uint64_t base_seed = 1;
    unsigned threads = 1;
    unsigned multiplier = 20;
    std::optional<double> sync_param;
    std::string out_dir;
};

int cmd_bench(const BenchArgs& a) {
    CorpusOptions opts;
    opts.algorithms.clear();
    for (const auto& name : a.algorithms) opts.algorithms.push_back(parse_algorithm(name));
    opts.seeds_per_graph = a.seeds;
    opts.base_seed = a.base_seed;
    opts.threads = a.threads;
    opts.run.total_multiplier = a.multiplier;
    opts.run.sync_param = a.sync_param;
    if (a.sync_param) {
        SnbParams p;
        p.sync_param = *a.sync_param;
        p.total_multiplier = a.multiplier;
        validate(p);
    }

    const CorpusResult result = run_corpus(a.dir, opts);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

    const fs::path dir = a.out_dir.empty() ? default_out_dir() : fs::path(a.out_dir);
    const fs::path records_path = dir / "records.csv";
    std::ofstream records = open_output(records_path);
    write_records_csv(result.records, records);
    close_output(records, records_path);

    const fs::path buckets_path = dir / "buckets.csv";
    std::ofstream buckets = open_output(buckets_path);
    write_buckets_csv(bucketize(result.records), buckets);
    close_output(buckets, buckets_path);
    std::cout << records_path.string() << '\n' << buckets_path.string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sync-and-Burst and Fruchterman-Reingold graph layout"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "snb 1.0");

    const auto positive_multiplier = CLI::Range(1u, 1000000u);

    LayoutArgs layout;
    auto* lay = app.add_subcommand("layout", "Lay out a graph; writes <stem>_<alg>.svg and <stem>_<alg>.csv");
    lay->add_option("graph", layout.input, "Edge list or GraphML file")->required();
    lay->add_option("--alg", layout.algorithm, "snb or fr")->check(CLI::IsMember({"snb", "fr"}, CLI::ignore_case))
        ->capture_default_str();
    lay->add_option("--seed", layout.seed, "Seed of the random initial layout")->capture_default_str();
    lay->add_option("--multiplier", layout.multiplier, "Iterations per vertex")->check(positive_multiplier)
        ->capture_default_str();
    lay->add_option("--sync-param", layout.sync_param, "Override the sync parameter s");
    lay->add_option("--out-dir", layout.out_dir, "Output directory (default $SNB_OUTPUT_DIR or .)");
    lay->add_option("--trajectory", layout.trajectory, "Also write every k-th layout to <stem>_<alg>_trajectory.csv");
    lay->add_flag("--labels", layout.labels, "Draw vertex labels");

    MetricsArgs metrics;
    auto* met = app.add_subcommand("metrics", "Compute layout metrics for a graph and a vertex,x,y layout");
    met->add_option("--graph", metrics.graph, "Graph file")->required();
    met->add_option("--layout", metrics.layout, "Layout CSV")->required();
    met->add_option("--format", metrics.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    met->add_option("-o,--output", metrics.output, "Output file (default stdout)");

    CurveArgs curve;
    auto* cur = app.add_subcommand("curve", "Write t,Ma,Mr,f rows of the magnitude schedule");
    cur->add_option("graph", curve.graph, "Graph file")->required();
    cur->add_option("--t-max", curve.t_max, "Last t (default multiplier * n)");
    cur->add_option("--multiplier", curve.multiplier, "Iterations per vertex")->check(positive_multiplier)
        ->capture_default_str();
    cur->add_option("--sync-param", curve.sync_param, "Override the sync parameter s");
    cur->add_option("-o,--output", curve.output, "Output file (default stdout)");

    GenerateArgs gen;
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated graph" + generator_list());
    gen_cmd->add_option("name", gen.name, "Generator")->required();
    gen_cmd->add_option("args", gen.args, "Generator sizes");
    gen_cmd->add_option("--seed", gen.seed, "Seed for random generators")->capture_default_str();
    gen_cmd->add_option("--edges-per-step", gen.edges_per_step, "scale-free: edges added per new vertex");
    gen_cmd->add_option("--target-m", gen.target_m, "scale-free: exact edge count");
    gen_cmd->add_option("--format", gen.format, "edgelist or graphml")
        ->check(CLI::IsMember({"edgelist", "graphml"}))
        ->capture_default_str();
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

    BenchArgs bench;
    auto* ben = app.add_subcommand("bench", "Run a corpus; writes records.csv and buckets.csv");
    ben->add_option("dir", bench.dir, "Directory of graph files")->required();
    ben->add_option("--alg", bench.algorithms, "Algorithms to run")
        ->check(CLI::IsMember({"snb", "fr"}, CLI::ignore_case))
        ->capture_default_str();
    ben->add_option("--seeds", bench.seeds, "Seeds per graph")->check(CLI::PositiveNumber)->capture_default_str();
    ben->add_option("--base-seed", bench.base_seed, "Seed of the first run of every graph")->capture_default_str();
    ben->add_option("--threads", bench.threads, "Worker threads; 1 for clean timing")->check(CLI::PositiveNumber)
        ->capture_default_str();
    ben->add_option("--multiplier", bench.multiplier, "Iterations per vertex")->check(positive_multiplier)
        ->capture_default_str();
    ben->add_option("--sync-param", bench.sync_param, "Fixed sync parameter (default: from betweenness)");
    ben->add_option("--out-dir", bench.out_dir, "Output directory (default $SNB_OUTPUT_DIR or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*lay) return cmd_layout(layout);
        if (*met) return cmd_metrics(metrics);
        if (*cur) return cmd_curve(curve);
        if (*gen_cmd) return cmd_generate(gen);
        if (*ben) return cmd_bench(bench);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const DegenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}
