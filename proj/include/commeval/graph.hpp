#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace commeval {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Nodes are dense ids 0..n-1, each carrying the external label it was read
/// with. Neighbor lists are sorted ascending, so edge queries are a binary
/// search and internal-neighborhood computations are sorted merges.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list over `labels.size()` nodes.
    /// Self-loops are dropped and duplicate edges (in either orientation) collapse.
    static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

    /// Same as above with labels "0".."n-1".
    static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

    std::size_t num_nodes() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const noexcept;

    const std::string& label(NodeId v) const noexcept { return labels_[v]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    /// Each undirected edge once, as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep` (sorted ascending); node i of the result is keep[i].
    Graph induced(std::span<const NodeId> keep) const;

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

struct GraphStats {
    std::size_t num_nodes = 0;
    std::size_t num_edges = 0;
    std::vector<std::size_t> degrees;
    /// Mean of the two middle values when n is even.
    double median_degree = 0.0;
};

GraphStats graph_stats(const Graph& g);

/// Maximal connected node sets, each sorted, ordered by their smallest node.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

/// Parses a whitespace-separated edge list ('#' starts a comment line).
///
/// Labels get dense ids in order of first appearance. With `symmetrize` set,
/// reversed and repeated edges collapse silently; without it, the input must
/// already list each undirected edge once and a repeat is a parse error.
Graph parse_edge_list(std::istream& in, bool symmetrize = true, std::string_view source = "<stream>");
Graph load_edge_list(const std::filesystem::path& path, bool symmetrize = true);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// Community lists by label, exactly as read (no filtering against a graph).
using RawCommunities = std::vector<std::vector<std::string>>;

RawCommunities parse_communities(std::istream& in);
RawCommunities read_communities(const std::filesystem::path& path);

} // namespace commeval
