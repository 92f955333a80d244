#pragma once

#include "commeval/cover.hpp"
#include "commeval/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace commeval {

enum class Algorithm { louvain, cnm, label_propagation, k_core };

std::string_view to_string(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct DetectionSpec {
    Algorithm algorithm = Algorithm::louvain;
    std::uint64_t seed = 1;
    std::size_t k = 3;
    std::size_t max_sweeps = 100;

    /// Throws std::invalid_argument unless k >= 2 and max_sweeps >= 1.
    void validate() const;

    /// Short provenance tag, e.g. "louvain-s1" or "k_core-k3".
    std::string tag() const;
};

/// Asynchronous label propagation. Each sweep visits nodes in a freshly
/// shuffled order; a node keeps its label when it is already among the most
/// frequent neighbor labels and otherwise takes one of those uniformly at
/// random. Stops after a sweep without change or after max_sweeps.
Cover label_propagation(const Graph& g, const DetectionSpec& spec);

/// Nodes of degree >= spec.k in the maximal k-core, one cluster per connected
/// component of the core; everything else ends up as singletons.
Cover k_core_communities(const Graph& g, const DetectionSpec& spec);

/// Clauset-Newman-Moore greedy agglomeration. Merges the adjacent pair with
/// the largest modularity gain while that gain is positive; ties go to the
/// lexicographically smallest (min member, min member) pair.
/// Throws UndefinedInputError on a graph without edges.
Cover cnm_greedy(const Graph& g, const DetectionSpec& spec);

struct LouvainTrace {
    double modularity = 0.0;
    std::size_t levels = 0;
};

/// Louvain local moving plus aggregation, node order shuffled once per level.
/// Throws UndefinedInputError on a graph without edges.
Cover louvain(const Graph& g, const DetectionSpec& spec, LouvainTrace* trace = nullptr);

Cover detect(const Graph& g, const DetectionSpec& spec);

/// A clustering together with where it came from.
struct LabeledCover {
    std::string id;
    std::string provenance;
    Cover cover;
    /// Identical (as a set of sets) to an earlier clustering of the same run.
    bool duplicate = false;
    CoverLoadReport load_report;
};

/// Reads a clustering produced by an external tool (MCL, Infomap, ...).
/// Same format and normalization as load_cover.
LabeledCover import_clustering(const std::filesystem::path& path, const Graph& g);

} // namespace commeval
