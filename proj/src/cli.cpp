#include "commeval/cli.hpp"

#include "commeval/compare.hpp"
#include "commeval/csv.hpp"
#include "commeval/detect.hpp"
#include "commeval/error.hpp"
#include "commeval/pipeline.hpp"
#include "commeval/quality.hpp"
#include "commeval/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace commeval {

namespace {

constexpr std::uint64_t default_seed = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Quality> parse_quality_list(const std::string& s) {
    if (s == "all") return {all_qualities.begin(), all_qualities.end()};
    std::vector<Quality> out;
    for (const auto& name : split_list(s)) {
        auto q = parse_quality(name);
        if (!q) throw UsageError("unknown quality '" + name + "'");
        out.push_back(*q);
    }
    if (out.empty()) throw UsageError("no quality selected");
    return out;
}

std::vector<CompareMetric> parse_compare_list(const std::string& s) {
    if (s == "all") return {all_compare_metrics.begin(), all_compare_metrics.end()};
    std::vector<CompareMetric> out;
    for (const auto& name : split_list(s)) {
        auto m = parse_compare_metric(name);
        if (!m) throw UsageError("unknown comparison metric '" + name + "'");
        out.push_back(*m);
    }
    if (out.empty()) throw UsageError("no comparison metric selected");
    return out;
}

// Writes to `path` when given, to `fallback` otherwise.
void with_output(const std::string& path, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& writer) {
    if (path.empty() || path == "-") {
        writer(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write " + path);
    writer(file);
    if (!file) throw IoError("write failure on " + path);
}

std::string stem_of(const std::string& path) { return std::filesystem::path(path).stem().string(); }

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Community quality-function evaluation toolkit", "commeval"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", std::string(version));

    std::function<void()> action;

    // prep
    std::string graph_path, truth_path, out_graph, out_truth;
    auto* prep = app.add_subcommand("prep", "Keep covered nodes and the largest connected component");
    prep->add_option("--graph", graph_path, "Edge list")->required();
    prep->add_option("--truth", truth_path, "Ground-truth communities")->required();
    prep->add_option("--out-graph", out_graph, "Filtered edge list")->required();
    prep->add_option("--out-truth", out_truth, "Filtered communities")->required();
    prep->callback([&] {
        action = [&] {
            const Graph g = load_edge_list(graph_path);
            const auto induced = induce_ground_truth_subgraph(g, read_communities(truth_path));
            write_edge_list(induced.graph, out_graph);
            write_cover(induced.truth, induced.graph, out_truth);
            err << "prep: n=" << induced.graph.num_nodes() << " m=" << induced.graph.num_edges()
                << " communities=" << induced.truth.size() << " (input n=" << g.num_nodes()
                << " m=" << g.num_edges() << ", unknown labels " << induced.unknown_labels << ")\n";
        };
    });

    // detect
    std::string algorithm_name, detect_out;
    DetectionSpec spec;
    spec.seed = default_seed;
    auto* det = app.add_subcommand("detect", "Run one community detection algorithm");
    det->add_option("--graph", graph_path, "Edge list")->required();
    det->add_option("--algorithm", algorithm_name, "louvain | cnm | label_propagation | k_core")->required();
    det->add_option("--seed", spec.seed, "Random seed")->capture_default_str();
    det->add_option("--k", spec.k, "Core order for k_core")->capture_default_str();
    det->add_option("--max-sweeps", spec.max_sweeps, "Sweep limit for label_propagation")->capture_default_str();
    det->add_option("--out", detect_out, "Output community file (default: stdout)");
    det->callback([&] {
        action = [&] {
            auto a = parse_algorithm(algorithm_name);
            if (!a) throw UsageError("unknown algorithm '" + algorithm_name + "'");
            spec.algorithm = *a;
            try {
                spec.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const Graph g = load_edge_list(graph_path);
            const Cover cover = detect(g, spec);
            with_output(detect_out, out, [&](std::ostream& o) { write_cover(cover, g, o); });
            err << "detect: " << spec.tag() << " found " << cover.size() << " clusters\n";
        };
    });

    // quality
    std::string clusters_path, metrics = "all", clustering_id, quality_out;
    SamplingPlan plan;
    plan.rng_seed = default_seed;
    auto* qual = app.add_subcommand("quality", "Score a clustering with the quality functions");
    qual->add_option("--graph", graph_path, "Edge list")->required();
    qual->add_option("--clusters", clusters_path, "Community file")->required();
    qual->add_option("--metrics", metrics, "'all' or a comma-separated list")->capture_default_str();
    qual->add_option("--samples", plan.sample_count, "Vertex samples for vertex-level functions")
        ->capture_default_str();
    qual->add_option("--epsilon", plan.epsilon, "Sampling error bound")->capture_default_str();
    qual->add_option("--p", plan.confidence_p, "Probability the bound fails")->capture_default_str();
    qual->add_option("--seed", plan.rng_seed, "Sampling seed")->capture_default_str();
    qual->add_option("--id", clustering_id, "Clustering id (default: file stem)");
    qual->add_option("--out", quality_out, "Output CSV (default: stdout)");
    qual->callback([&] {
        action = [&] {
            const auto selected = parse_quality_list(metrics);
            try {
                plan.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const Graph g = load_edge_list(graph_path);
            CoverLoadReport report;
            const Cover cover = load_cover(clusters_path, g, &report);
            const std::string id = clustering_id.empty() ? stem_of(clusters_path) : clustering_id;
            if (report.unknown_labels) err << "quality: " << report.unknown_labels << " unknown labels skipped\n";
            if (report.normalization.completed_singletons)
                err << "quality: " << report.normalization.completed_singletons
                    << " uncovered nodes added as singletons\n";
            with_output(quality_out, out, [&](std::ostream& o) {
                o << "clustering_id,metric_name,value,mode,sample_count,seed\n";
                for (Quality q : selected) {
                    const QualityScore s = evaluate(g, cover, q, plan);
                    o << csv_field(id) << ',' << to_string(q) << ',' << format_real(s.value) << ','
                      << (s.mode == EvalMode::exact ? "exact" : "sampled") << ',' << s.sample_count << ','
                      << s.seed << '\n';
                }
            });
        };
    });

    // compare
    std::string compare_metrics = "all", compare_out;
    auto* cmp = app.add_subcommand("compare", "Compare a clustering against ground truth");
    cmp->add_option("--graph", graph_path, "Edge list")->required();
    cmp->add_option("--clusters", clusters_path, "Community file")->required();
    cmp->add_option("--truth", truth_path, "Ground-truth communities")->required();
    cmp->add_option("--metrics", compare_metrics, "'all', fb3, onmi")->capture_default_str();
    cmp->add_option("--id", clustering_id, "Clustering id (default: file stem)");
    cmp->add_option("--out", compare_out, "Output CSV (default: stdout)");
    cmp->callback([&] {
        action = [&] {
            const auto selected = parse_compare_list(compare_metrics);
            const Graph g = load_edge_list(graph_path);
            const Cover cover = load_cover(clusters_path, g);
            const Cover truth = load_cover(truth_path, g);
            const std::string id = clustering_id.empty() ? stem_of(clusters_path) : clustering_id;
            with_output(compare_out, out, [&](std::ostream& o) {
                o << "clustering_id,metric,value,precision,recall\n";
                for (CompareMetric m : selected) {
                    const ComparisonResult r = compare(cover, truth, m);
                    o << csv_field(id) << ',' << to_string(m) << ',' << format_real(r.value) << ','
                      << format_real(r.precision) << ',' << format_real(r.recall) << '\n';
                }
            });
        };
    });

    // pipeline
    std::string config_path, out_dir;
    std::size_t jobs = 0;
    auto* pipe = app.add_subcommand("pipeline", "Run the full ranking-correlation methodology");
    pipe->add_option("--config", config_path, "Pipeline config file")->required();
    pipe->add_option("--out-dir", out_dir, "Output directory (overrides the config)");
    pipe->add_option("--jobs", jobs, "Graphs processed in parallel (overrides the config)");
    pipe->callback([&] {
        action = [&] {
            PipelineConfig config = load_config(config_path);
            if (!out_dir.empty()) config.out_dir = out_dir;
            if (jobs > 0) config.jobs = jobs;
            try {
                config.sampling.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const ReportBundle bundle = run_pipeline(config);
            write_report(bundle, config, config.out_dir);
            err << "pipeline: " << bundle.graphs.size() << " graphs processed, " << bundle.skipped.size()
                << " skipped; results in " << config.out_dir.string() << '\n';
            for (const auto& s : bundle.skipped) err << "pipeline: skipped " << s << '\n';
            for (const auto& w : bundle.warnings) err << "pipeline: " << w << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace commeval
