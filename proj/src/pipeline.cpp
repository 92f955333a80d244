#include "commeval/pipeline.hpp"

#include "commeval/csv.hpp"
#include "commeval/error.hpp"
#include "commeval/spearman.hpp"
#include "commeval/version.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace commeval {

Eigen::MatrixXd ScoreMatrix::values() const {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(clustering_ids.size()),
                        static_cast<Eigen::Index>(qualities.size()));
    for (std::size_t r = 0; r < clustering_ids.size(); ++r)
        for (std::size_t c = 0; c < qualities.size(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = at(r, c).value;
    return out;
}

Eigen::VectorXd ScoreMatrix::column(std::size_t col) const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(clustering_ids.size()));
    for (std::size_t r = 0; r < clustering_ids.size(); ++r)
        out(static_cast<Eigen::Index>(r)) = at(r, col).value;
    return out;
}

Eigen::VectorXd GoldVector::values() const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(results.size()));
    for (std::size_t i = 0; i < results.size(); ++i) out(static_cast<Eigen::Index>(i)) = results[i].value;
    return out;
}

std::vector<LabeledCover> run_detections(const Graph& g, const std::vector<DetectionSpec>& specs,
                                         const std::vector<std::filesystem::path>& imports) {
    std::vector<LabeledCover> out;
    std::map<std::string, std::size_t> used;
    auto add = [&](LabeledCover lc) {
        const std::size_t seen = used[lc.id]++;
        if (seen) lc.id += "#" + std::to_string(seen + 1);
        for (const auto& earlier : out)
            if (same_clusters(earlier.cover, lc.cover)) {
                lc.duplicate = true;
                break;
            }
        out.push_back(std::move(lc));
    };

    for (const auto& spec : specs) {
        LabeledCover lc;
        lc.cover = detect(g, spec);
        lc.id = spec.tag();
        lc.provenance = std::string(to_string(spec.algorithm));
        add(std::move(lc));
    }
    for (const auto& path : imports) add(import_clustering(path, g));

    if (out.size() < 3)
        throw std::invalid_argument("ranking needs at least 3 clusterings, got " + std::to_string(out.size()));
    return out;
}

ScoreMatrix score_clusterings(const Graph& g, const std::vector<LabeledCover>& clusterings,
                              const SamplingPlan& plan) {
    ScoreMatrix scores;
    scores.qualities.assign(all_qualities.begin(), all_qualities.end());
    for (const auto& lc : clusterings) {
        scores.clustering_ids.push_back(lc.id);
        for (Quality q : scores.qualities) scores.cells.push_back(evaluate(g, lc.cover, q, plan));
    }
    return scores;
}

GoldVector gold_standard(const Cover& truth, const std::vector<LabeledCover>& clusterings,
                         CompareMetric metric) {
    GoldVector gold;
    gold.metric = metric;
    for (const auto& lc : clusterings) {
        gold.clustering_ids.push_back(lc.id);
        gold.results.push_back(compare(lc.cover, truth, metric));
    }
    return gold;
}

QualityCorrelationRow quality_correlation_row(const std::string& graph_id, const GoldVector& gold,
                                              const ScoreMatrix& scores,
                                              const std::vector<GoldVector>& comparisons) {
    if (gold.clustering_ids.size() < 3)
        throw std::invalid_argument("correlating rankings needs at least 3 clusterings");
    if (gold.clustering_ids != scores.clustering_ids)
        throw std::invalid_argument("gold vector and score matrix list different clusterings");

    QualityCorrelationRow row;
    row.graph_id = graph_id;
    row.metric = gold.metric;
    const Eigen::VectorXd reference = gold.values();
    for (std::size_t c = 0; c < scores.qualities.size(); ++c) {
        row.columns.emplace_back(to_string(scores.qualities[c]));
        row.coefficients.push_back(spearman(reference, scores.column(c)));
    }
    for (const auto& other : comparisons) {
        if (other.clustering_ids != gold.clustering_ids)
            throw std::invalid_argument("gold vectors list different clusterings");
        row.columns.emplace_back(to_string(other.metric));
        row.coefficients.push_back(spearman(reference, other.values()));
    }
    return row;
}

ContextMatrix context_matrix(const std::vector<QualityCorrelationRow>& rows) {
    if (rows.size() < 2) throw std::invalid_argument("a context matrix needs at least two graphs");
    const auto& first = rows.front();
    for (const auto& row : rows)
        if (row.metric != first.metric || row.columns != first.columns)
            throw std::invalid_argument("correlation rows disagree on metric or columns");

    const std::string own(to_string(first.metric));
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < first.columns.size(); ++c)
        if (first.columns[c] != own) kept.push_back(c);

    const auto n = static_cast<Eigen::Index>(rows.size());
    ContextMatrix out;
    out.metric = first.metric;
    out.values = Eigen::MatrixXd::Identity(n, n);
    out.missing = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
    for (const auto& row : rows) out.graph_ids.push_back(row.graph_id);

    std::vector<double> a, b;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            a.clear();
            b.clear();
            for (std::size_t c : kept) {
                const auto& x = rows[static_cast<std::size_t>(i)].coefficients[c];
                const auto& y = rows[static_cast<std::size_t>(j)].coefficients[c];
                if (x && y) {
                    a.push_back(*x);
                    b.push_back(*y);
                }
            }
            std::optional<double> rho;
            if (a.size() >= 2) rho = spearman(std::span<const double>(a), std::span<const double>(b));
            const double v = rho ? *rho : std::numeric_limits<double>::quiet_NaN();
            out.values(i, j) = out.values(j, i) = v;
            out.missing(i, j) = out.missing(j, i) = !rho;
        }
    }
    return out;
}

GraphReport run_graph(const GraphInput& input, const PipelineConfig& config) {
    GraphReport report;
    report.graph_id = input.id;

    const Graph raw = load_edge_list(input.edges);
    auto induced = induce_ground_truth_subgraph(raw, read_communities(input.truth));
    const Graph& g = induced.graph;
    report.num_nodes = g.num_nodes();
    report.num_edges = g.num_edges();
    if (induced.unknown_labels)
        report.warnings.push_back(std::to_string(induced.unknown_labels) +
                                  " ground-truth labels not in the graph");
    if (g.num_nodes() != raw.num_nodes())
        report.warnings.push_back(std::to_string(raw.num_nodes() - g.num_nodes()) +
                                  " nodes dropped (uncovered or outside the largest component)");

    report.clusterings = run_detections(g, config.detections, input.imports);
    if (config.inject_truth) {
        LabeledCover truth;
        truth.id = "ground_truth";
        truth.provenance = "truth";
        truth.cover = induced.truth;
        for (const auto& lc : report.clusterings)
            if (same_clusters(lc.cover, truth.cover)) truth.duplicate = true;
        report.clusterings.push_back(std::move(truth));
    }
    for (const auto& lc : report.clusterings) {
        if (lc.duplicate) report.warnings.push_back("clustering " + lc.id + " duplicates an earlier one");
        if (lc.load_report.unknown_labels)
            report.warnings.push_back("clustering " + lc.id + ": " +
                                      std::to_string(lc.load_report.unknown_labels) + " unknown labels skipped");
        if (lc.load_report.normalization.completed_singletons)
            report.warnings.push_back("clustering " + lc.id + ": " +
                                      std::to_string(lc.load_report.normalization.completed_singletons) +
                                      " uncovered nodes added as singletons");
        std::size_t disconnected = 0;
        for (std::size_t c = 0; c < lc.cover.size(); ++c)
            if (lc.cover.cluster(c).size() > 1 && cluster_view(g, lc.cover, c).disconnected) ++disconnected;
        if (disconnected)
            report.warnings.push_back("clustering " + lc.id + ": " + std::to_string(disconnected) +
                                      " disconnected clusters (diameter estimated on one part)");
    }

    report.scores = score_clusterings(g, report.clusterings, config.sampling);
    for (CompareMetric m : all_compare_metrics)
        report.gold.push_back(gold_standard(induced.truth, report.clusterings, m));
    for (const auto& gold : report.gold)
        report.correlations.push_back(quality_correlation_row(input.id, gold, report.scores, report.gold));
    for (const auto& row : report.correlations)
        for (std::size_t c = 0; c < row.columns.size(); ++c)
            if (!row.coefficients[c])
                report.warnings.push_back(std::string(to_string(row.metric)) + " correlation with " +
                                          row.columns[c] + " undefined (constant ranking)");
    return report;
}

ReportBundle run_pipeline(const PipelineConfig& config) {
    config.sampling.validate();
    const std::size_t count = config.graphs.size();
    std::vector<std::optional<GraphReport>> results(count);
    std::vector<std::string> errors(count);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = run_graph(config.graphs[i], config);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(config.jobs, 1, std::max<std::size_t>(count, 1));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    ReportBundle bundle;
    for (std::size_t i = 0; i < count; ++i) {
        if (results[i])
            bundle.graphs.push_back(std::move(*results[i]));
        else
            bundle.skipped.push_back(config.graphs[i].id + ": " + errors[i]);
    }
    std::sort(bundle.graphs.begin(), bundle.graphs.end(),
              [](const auto& a, const auto& b) { return a.graph_id < b.graph_id; });
    std::sort(bundle.skipped.begin(), bundle.skipped.end());

    if (bundle.graphs.size() < 2) {
        bundle.warnings.push_back("context matrices need at least two graphs; none written");
        return bundle;
    }
    for (std::size_t m = 0; m < all_compare_metrics.size(); ++m) {
        std::vector<QualityCorrelationRow> rows;
        for (const auto& graph : bundle.graphs) rows.push_back(graph.correlations[m]);
        bundle.contexts.push_back(context_matrix(rows));
    }
    return bundle;
}

namespace {

std::string_view mode_name(EvalMode m) { return m == EvalMode::exact ? "exact" : "sampled"; }

std::string coefficient(const std::optional<double>& x) { return x ? format_real(*x) : "NA"; }

} // namespace

void write_scores_csv(const ReportBundle& bundle, std::ostream& out) {
    out << "graph_id,clustering_id,metric_name,value,mode,sample_count,seed\n";
    for (const auto& graph : bundle.graphs) {
        const auto& s = graph.scores;
        for (std::size_t r = 0; r < s.clustering_ids.size(); ++r)
            for (std::size_t c = 0; c < s.qualities.size(); ++c) {
                const auto& cell = s.at(r, c);
                out << csv_field(graph.graph_id) << ',' << csv_field(s.clustering_ids[r]) << ','
                    << to_string(cell.metric) << ',' << format_real(cell.value) << ','
                    << mode_name(cell.mode) << ',' << cell.sample_count << ',' << cell.seed << '\n';
            }
    }
}

void write_gold_csv(const ReportBundle& bundle, std::ostream& out) {
    out << "graph_id,clustering_id,metric,value,precision,recall\n";
    for (const auto& graph : bundle.graphs)
        for (const auto& gold : graph.gold)
            for (std::size_t i = 0; i < gold.results.size(); ++i) {
                const auto& r = gold.results[i];
                out << csv_field(graph.graph_id) << ',' << csv_field(gold.clustering_ids[i]) << ','
                    << to_string(r.metric) << ',' << format_real(r.value) << ','
                    << format_real(r.precision) << ',' << format_real(r.recall) << '\n';
            }
}

void write_quality_correlations_csv(const ReportBundle& bundle, std::ostream& out) {
    if (bundle.graphs.empty()) {
        out << "graph_id,comparison\n";
        return;
    }
    out << "graph_id,comparison";
    for (const auto& col : bundle.graphs.front().correlations.front().columns) out << ',' << col;
    out << '\n';
    for (std::size_t m = 0; m < all_compare_metrics.size(); ++m)
        for (const auto& graph : bundle.graphs) {
            const auto& row = graph.correlations[m];
            out << csv_field(row.graph_id) << ',' << to_string(row.metric);
            for (const auto& x : row.coefficients) out << ',' << coefficient(x);
            out << '\n';
        }
}

void write_context_matrix_csv(const ContextMatrix& matrix, std::ostream& out) {
    out << "graph";
    for (const auto& id : matrix.graph_ids) out << ',' << csv_field(id);
    out << '\n';
    for (Eigen::Index i = 0; i < matrix.values.rows(); ++i) {
        out << csv_field(matrix.graph_ids[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < matrix.values.cols(); ++j)
            out << ',' << (matrix.missing(i, j) ? std::string("NA") : format_real(matrix.values(i, j)));
        out << '\n';
    }
}

void write_manifest(const ReportBundle& bundle, const PipelineConfig& config, std::ostream& out) {
    out << "commeval " << version << '\n';
    out << "sampling samples=" << config.sampling.sample_count
        << " epsilon=" << format_real(config.sampling.epsilon)
        << " p=" << format_real(config.sampling.confidence_p) << " seed=" << config.sampling.rng_seed
        << " hoeffding_bound=" << hoeffding_sample_size(config.sampling.epsilon, config.sampling.confidence_p)
        << '\n';
    for (const auto& spec : config.detections)
        out << "detection " << spec.tag() << " algorithm=" << to_string(spec.algorithm)
            << " seed=" << spec.seed << " k=" << spec.k << " max_sweeps=" << spec.max_sweeps << '\n';
    out << "inject_truth=" << (config.inject_truth ? "true" : "false") << '\n';
    for (const auto& graph : bundle.graphs) {
        out << "graph " << graph.graph_id << " n=" << graph.num_nodes << " m=" << graph.num_edges
            << " clusterings=" << graph.clusterings.size() << '\n';
        for (const auto& lc : graph.clusterings)
            out << "  clustering " << lc.id << " provenance=" << lc.provenance
                << " clusters=" << lc.cover.size() << (lc.duplicate ? " duplicate" : "") << '\n';
        for (const auto& w : graph.warnings) out << "  warning " << w << '\n';
    }
    for (const auto& s : bundle.skipped) out << "skipped " << s << '\n';
    for (const auto& w : bundle.warnings) out << "warning " << w << '\n';
}

void write_report(const ReportBundle& bundle, const PipelineConfig& config,
                  const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto emit = [&](const std::string& name, auto&& writer) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write " + path.string());
        writer(out);
        if (!out) throw IoError("write failure on " + path.string());
    };
    emit("scores.csv", [&](std::ostream& o) { write_scores_csv(bundle, o); });
    emit("gold.csv", [&](std::ostream& o) { write_gold_csv(bundle, o); });
    emit("quality_correlations.csv", [&](std::ostream& o) { write_quality_correlations_csv(bundle, o); });
    for (const auto& ctx : bundle.contexts)
        emit("context_matrix_" + std::string(to_string(ctx.metric)) + ".csv",
             [&](std::ostream& o) { write_context_matrix_csv(ctx, o); });
    emit("manifest.txt", [&](std::ostream& o) { write_manifest(bundle, config, o); });
}

} // namespace commeval
