#pragma once

#include "commeval/compare.hpp"
#include "commeval/cover.hpp"
#include "commeval/detect.hpp"
#include "commeval/graph.hpp"
#include "commeval/quality.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace commeval {

/// clusterings x quality functions.
struct ScoreMatrix {
    std::vector<std::string> clustering_ids;
    std::vector<Quality> qualities;
    /// Row-major, one entry per (clustering, quality).
    std::vector<QualityScore> cells;

    const QualityScore& at(std::size_t row, std::size_t col) const {
        return cells[row * qualities.size() + col];
    }
    Eigen::MatrixXd values() const;
    Eigen::VectorXd column(std::size_t col) const;
};

/// One comparison value per clustering against the ground truth.
struct GoldVector {
    CompareMetric metric{};
    std::vector<std::string> clustering_ids;
    std::vector<ComparisonResult> results;

    Eigen::VectorXd values() const;
};

/// Spearman coefficient of every quality (and every comparison metric)
/// ranking against the ranking given by `metric`, for one graph.
struct QualityCorrelationRow {
    std::string graph_id;
    CompareMetric metric{};
    std::vector<std::string> columns;
    std::vector<std::optional<double>> coefficients;
};

/// graphs x graphs Spearman coefficients between correlation rows.
struct ContextMatrix {
    CompareMetric metric{};
    std::vector<std::string> graph_ids;
    Eigen::MatrixXd values;
    /// true where the coefficient is undefined (values holds NaN there).
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> missing;
};

/// Runs every spec, then imports every file. Clusterings identical to an
/// earlier one are kept and flagged. Throws std::invalid_argument when fewer
/// than three clusterings result.
std::vector<LabeledCover> run_detections(const Graph& g, const std::vector<DetectionSpec>& specs,
                                         const std::vector<std::filesystem::path>& imports);

ScoreMatrix score_clusterings(const Graph& g, const std::vector<LabeledCover>& clusterings,
                              const SamplingPlan& plan);

GoldVector gold_standard(const Cover& truth, const std::vector<LabeledCover>& clusterings,
                         CompareMetric metric);

/// Correlates every quality column, then every gold vector in `comparisons`
/// (in order), against `gold`. Undefined coefficients stay empty.
/// Throws std::invalid_argument with fewer than three clusterings.
QualityCorrelationRow quality_correlation_row(const std::string& graph_id, const GoldVector& gold,
                                              const ScoreMatrix& scores,
                                              const std::vector<GoldVector>& comparisons = {});

/// Spearman between every pair of rows, excluding the column of the rows'
/// own comparison metric. Columns missing in either row are dropped for that
/// pair. Throws std::invalid_argument on fewer than two rows or rows that
/// disagree on metric or columns.
ContextMatrix context_matrix(const std::vector<QualityCorrelationRow>& rows);

struct GraphInput {
    std::string id;
    std::filesystem::path edges;
    std::filesystem::path truth;
    std::vector<std::filesystem::path> imports;
};

struct PipelineConfig {
    std::vector<GraphInput> graphs;
    std::vector<DetectionSpec> detections;
    SamplingPlan sampling;
    std::filesystem::path out_dir = "results";
    std::size_t jobs = 1;
    /// Adds the ground truth itself as one more clustering.
    bool inject_truth = false;
};

/// louvain (seed 1), cnm, label propagation (seed 1) and the 3-core: the
/// roster used when a config names no detection.
std::vector<DetectionSpec> default_detections();

/// Reads the sectioned key = value format. Relative paths resolve against
/// `base_dir`. Throws ConfigError with the offending line.
PipelineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir,
                            std::string_view source = "<config>");
PipelineConfig load_config(const std::filesystem::path& path);

struct GraphReport {
    std::string graph_id;
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    std::vector<LabeledCover> clusterings;
    ScoreMatrix scores;
    std::vector<GoldVector> gold;
    std::vector<QualityCorrelationRow> correlations;
    std::vector<std::string> warnings;
};

struct ReportBundle {
    std::vector<GraphReport> graphs;
    std::vector<ContextMatrix> contexts;
    std::vector<std::string> skipped;
    std::vector<std::string> warnings;
};

/// Preprocesses and evaluates one graph.
GraphReport run_graph(const GraphInput& input, const PipelineConfig& config);

/// Every graph (in parallel up to config.jobs), then one context matrix per
/// comparison metric. A failing graph is skipped and recorded, never fatal.
ReportBundle run_pipeline(const PipelineConfig& config);

void write_scores_csv(const ReportBundle& bundle, std::ostream& out);
void write_gold_csv(const ReportBundle& bundle, std::ostream& out);
void write_quality_correlations_csv(const ReportBundle& bundle, std::ostream& out);
void write_context_matrix_csv(const ContextMatrix& matrix, std::ostream& out);
void write_manifest(const ReportBundle& bundle, const PipelineConfig& config, std::ostream& out);

/// scores.csv, gold.csv, quality_correlations.csv, context_matrix_<metric>.csv
/// and manifest.txt under `dir` (created if needed).
void write_report(const ReportBundle& bundle, const PipelineConfig& config,
                  const std::filesystem::path& dir);

} // namespace commeval
