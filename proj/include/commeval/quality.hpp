#pragma once

#include "commeval/cover.hpp"
#include "commeval/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace commeval {

/// The ten intrinsic quality functions. Higher is better for all of them.
enum class Quality {
    clustering_coefficient,
    permanence,
    flake_odf,
    fomd,
    cut_ratio,
    conductance,
    compactness,
    modularity,
    surprise,
    significance,
};

inline constexpr std::array<Quality, 10> all_qualities{
    Quality::clustering_coefficient, Quality::permanence, Quality::flake_odf, Quality::fomd,
    Quality::cut_ratio,              Quality::conductance, Quality::compactness,
    Quality::modularity,             Quality::surprise,    Quality::significance,
};

std::string_view to_string(Quality q) noexcept;
std::optional<Quality> parse_quality(std::string_view name) noexcept;

/// Scored per (node, community) membership and averaged over nodes.
constexpr bool is_vertex_level(Quality q) noexcept {
    return q == Quality::clustering_coefficient || q == Quality::permanence ||
           q == Quality::flake_odf || q == Quality::fomd;
}

enum class EvalMode { exact, sampled };

struct QualityScore {
    Quality metric{};
    /// +infinity for degenerate divergences (surprise, significance).
    double value = 0.0;
    EvalMode mode = EvalMode::exact;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
};

/// Number of i.i.d. [0,1] samples after which the mean is within epsilon of
/// its expectation except with probability p (Hoeffding). Always >= 1.
/// Throws std::invalid_argument unless epsilon > 0 and 0 < p < 2.
std::size_t hoeffding_sample_size(double epsilon, double p);

struct SamplingPlan {
    std::size_t sample_count = 5000;
    double epsilon = 0.02;
    double confidence_p = 0.05;
    std::uint64_t rng_seed = 0;

    /// Throws std::invalid_argument when sample_count is below the Hoeffding bound.
    void validate() const;
};

/// Two-point Kullback-Leibler divergence D(x || y) in nats, with 0 log 0 = 0.
/// Returns +infinity when y puts zero mass on an event x does not.
double kl_two_point(double x, double y) noexcept;

// Vertex-level functions, exact evaluation.
QualityScore clustering_coefficient(const Graph& g, const Cover& cover);
QualityScore permanence(const Graph& g, const Cover& cover);
QualityScore flake_odf(const Graph& g, const Cover& cover);
QualityScore fomd(const Graph& g, const Cover& cover);

// Community-level functions. Cut ratio and conductance weight each cluster by
// its size over the total membership count (n for a partition).
QualityScore cut_ratio(const Graph& g, const Cover& cover);
QualityScore conductance(const Graph& g, const Cover& cover);
QualityScore compactness(const Graph& g, const Cover& cover);
/// Throws UndefinedInputError on a graph without edges.
QualityScore modularity(const Graph& g, const Cover& cover);

// Graph-level functions. Both throw UndefinedInputError unless n >= 2 and m >= 1.
QualityScore surprise(const Graph& g, const Cover& cover);
QualityScore significance(const Graph& g, const Cover& cover);

/// Score of a single node: the mean over its memberships. `metric` must be vertex-level.
double vertex_score(const Graph& g, const Cover& cover, Quality metric, NodeId v);

/// Mean vertex score over plan.sample_count nodes drawn uniformly with
/// replacement; the exact mean when the graph has no more nodes than that.
QualityScore sampled_vertex_average(const Graph& g, const Cover& cover, Quality metric,
                                    const SamplingPlan& plan);

/// Exact evaluation of any of the ten functions.
QualityScore evaluate(const Graph& g, const Cover& cover, Quality metric);

/// Vertex-level functions go through sampled_vertex_average, others are exact.
QualityScore evaluate(const Graph& g, const Cover& cover, Quality metric, const SamplingPlan& plan);

} // namespace commeval
