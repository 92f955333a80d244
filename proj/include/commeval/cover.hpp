#pragma once

#include "commeval/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace commeval {

/// A clustering of a graph's nodes: possibly overlapping, always total.
///
/// Construction normalizes: members are sorted and deduplicated, repeated
/// clusters collapse onto their first occurrence, and nodes that no cluster
/// mentions are appended as singletons in node order.
class Cover {
public:
    struct Normalization {
        std::size_t completed_singletons = 0;
        std::size_t collapsed_duplicates = 0;
    };

    Cover() = default;

    /// Throws InvalidCoverError on an empty cluster or a member id >= num_nodes.
    static Cover from_clusters(std::size_t num_nodes, std::vector<std::vector<NodeId>> clusters,
                               Normalization* report = nullptr);

    /// Partition from a per-node label vector; clusters ordered by smallest member.
    static Cover from_labels(std::span<const std::size_t> labels);

    static Cover singletons(std::size_t num_nodes);
    static Cover whole(std::size_t num_nodes);

    std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const noexcept { return clusters_.size(); }

    std::span<const NodeId> cluster(std::size_t c) const noexcept { return clusters_[c]; }
    const std::vector<std::vector<NodeId>>& clusters() const noexcept { return clusters_; }

    /// Indices of the clusters containing v, ascending.
    std::span<const std::size_t> memberships(NodeId v) const noexcept {
        return {membership_.data() + offsets_[v], membership_.data() + offsets_[v + 1]};
    }

    bool overlapping() const noexcept { return membership_.size() > num_nodes(); }

    /// Clusters as a sorted list of sorted member lists (order-free identity).
    std::vector<std::vector<NodeId>> canonical() const;

private:
    std::vector<std::vector<NodeId>> clusters_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> membership_;
};

bool same_clusters(const Cover& a, const Cover& b);

struct CoverLoadReport {
    std::size_t unknown_labels = 0;
    /// Communities left empty once unknown labels were removed.
    std::size_t dropped_communities = 0;
    Cover::Normalization normalization;
};

/// Maps label-based communities onto g. Unknown labels are skipped and counted.
/// Throws InvalidCoverError when no community survives the filtering.
Cover cover_from_communities(const RawCommunities& communities, const Graph& g,
                             CoverLoadReport* report = nullptr);

Cover load_cover(const std::filesystem::path& path, const Graph& g, CoverLoadReport* report = nullptr);

/// One community per line, members written by label.
void write_cover(const Cover& cover, const Graph& g, std::ostream& out);
void write_cover(const Cover& cover, const Graph& g, const std::filesystem::path& path);

struct ClusterView {
    std::size_t size = 0;
    std::size_t internal_edges = 0;
    std::size_t cut = 0;
    std::size_t volume = 0;
    std::size_t diameter = 0;
    /// The cluster does not induce a connected subgraph (diameter covers one part).
    bool disconnected = false;
};

/// Exact counts; the diameter is the double-BFS estimate and is skipped
/// (left 0) when `with_diameter` is false.
ClusterView cluster_view(const Graph& g, const Cover& cover, std::size_t c, bool with_diameter = true);
std::vector<ClusterView> cluster_views(const Graph& g, const Cover& cover);

struct InducedGroundTruth {
    Graph graph;
    Cover truth;
    std::size_t unknown_labels = 0;
    /// For each node of `graph`, its id in the input graph.
    std::vector<NodeId> original_ids;
};

/// Keeps the nodes named by at least one community, then the largest connected
/// component of what remains (ties go to the component holding the smallest
/// input id), and restricts the communities to it.
InducedGroundTruth induce_ground_truth_subgraph(const Graph& g, const RawCommunities& truth);

} // namespace commeval
