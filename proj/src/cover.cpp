#include "commeval/cover.hpp"

#include "commeval/diameter.hpp"
#include "commeval/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace commeval {

Cover Cover::from_clusters(std::size_t num_nodes, std::vector<std::vector<NodeId>> clusters,
                           Normalization* report) {
    Normalization norm;
    Cover cover;
    std::set<std::vector<NodeId>> seen;
    std::vector<bool> covered(num_nodes, false);
    for (auto& members : clusters) {
        if (members.empty()) throw InvalidCoverError("empty cluster");
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.back() >= num_nodes)
            throw InvalidCoverError("cluster member " + std::to_string(members.back()) +
                                    " out of range for " + std::to_string(num_nodes) + " nodes");
        if (!seen.insert(members).second) {
            ++norm.collapsed_duplicates;
            continue;
        }
        for (NodeId v : members) covered[v] = true;
        cover.clusters_.push_back(std::move(members));
    }
    for (NodeId v = 0; v < num_nodes; ++v) {
        if (!covered[v]) {
            cover.clusters_.push_back({v});
            ++norm.completed_singletons;
        }
    }

    cover.offsets_.assign(num_nodes + 1, 0);
    for (const auto& c : cover.clusters_)
        for (NodeId v : c) ++cover.offsets_[v + 1];
    for (std::size_t i = 0; i < num_nodes; ++i) cover.offsets_[i + 1] += cover.offsets_[i];
    cover.membership_.resize(cover.offsets_.back());
    std::vector<std::size_t> fill(cover.offsets_.begin(), cover.offsets_.end() - 1);
    for (std::size_t c = 0; c < cover.clusters_.size(); ++c)
        for (NodeId v : cover.clusters_[c]) cover.membership_[fill[v]++] = c;

    if (report) *report = norm;
    return cover;
}

Cover Cover::from_labels(std::span<const std::size_t> labels) {
    std::map<std::size_t, std::size_t> slot;
    std::vector<std::vector<NodeId>> clusters;
    for (NodeId v = 0; v < labels.size(); ++v) {
        auto [it, inserted] = slot.emplace(labels[v], clusters.size());
        if (inserted) clusters.emplace_back();
        clusters[it->second].push_back(v);
    }
    return from_clusters(labels.size(), std::move(clusters));
}

Cover Cover::singletons(std::size_t num_nodes) { return from_clusters(num_nodes, {}); }

Cover Cover::whole(std::size_t num_nodes) {
    if (num_nodes == 0) return from_clusters(0, {});
    std::vector<NodeId> all(num_nodes);
    for (NodeId v = 0; v < num_nodes; ++v) all[v] = v;
    return from_clusters(num_nodes, {std::move(all)});
}

std::vector<std::vector<NodeId>> Cover::canonical() const {
    auto out = clusters_;
    std::sort(out.begin(), out.end());
    return out;
}

bool same_clusters(const Cover& a, const Cover& b) {
    return a.num_nodes() == b.num_nodes() && a.canonical() == b.canonical();
}

Cover cover_from_communities(const RawCommunities& communities, const Graph& g,
                             CoverLoadReport* report) {
    CoverLoadReport r;
    std::vector<std::vector<NodeId>> clusters;
    for (const auto& community : communities) {
        std::vector<NodeId> members;
        for (const auto& label : community) {
            if (auto id = g.find(label))
                members.push_back(*id);
            else
                ++r.unknown_labels;
        }
        if (members.empty()) {
            ++r.dropped_communities;
            continue;
        }
        clusters.push_back(std::move(members));
    }
    if (clusters.empty()) throw InvalidCoverError("no community matches the graph's nodes");
    Cover cover = Cover::from_clusters(g.num_nodes(), std::move(clusters), &r.normalization);
    if (report) *report = r;
    return cover;
}

Cover load_cover(const std::filesystem::path& path, const Graph& g, CoverLoadReport* report) {
    return cover_from_communities(read_communities(path), g, report);
}

void write_cover(const Cover& cover, const Graph& g, std::ostream& out) {
    for (const auto& members : cover.clusters()) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out << ' ';
            out << g.label(members[i]);
        }
        out << '\n';
    }
}

void write_cover(const Cover& cover, const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_cover(cover, g, out);
    if (!out) throw IoError("write failure on " + path.string());
}

ClusterView cluster_view(const Graph& g, const Cover& cover, std::size_t c, bool with_diameter) {
    const auto members = cover.cluster(c);
    ClusterView view;
    view.size = members.size();
    std::size_t internal_endpoints = 0;
    for (NodeId u : members) {
        view.volume += g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            if (std::binary_search(members.begin(), members.end(), v))
                ++internal_endpoints;
            else
                ++view.cut;
        }
    }
    view.internal_edges = internal_endpoints / 2;
    if (!with_diameter) return view;
    const auto diam = approx_diameter(g, members);
    view.diameter = diam.diameter;
    view.disconnected = diam.disconnected;
    return view;
}

std::vector<ClusterView> cluster_views(const Graph& g, const Cover& cover) {
    std::vector<ClusterView> views(cover.size());
    for (std::size_t c = 0; c < cover.size(); ++c) views[c] = cluster_view(g, cover, c);
    return views;
}

InducedGroundTruth induce_ground_truth_subgraph(const Graph& g, const RawCommunities& truth) {
    InducedGroundTruth result;
    std::vector<bool> covered(g.num_nodes(), false);
    for (const auto& community : truth) {
        for (const auto& label : community) {
            if (auto id = g.find(label))
                covered[*id] = true;
            else
                ++result.unknown_labels;
        }
    }
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        if (covered[v]) keep.push_back(v);
    if (keep.empty()) throw EmptyGraphError("no graph node belongs to a ground-truth community");

    const Graph covered_graph = g.induced(keep);
    const auto components = connected_components(covered_graph);
    // components are ordered by smallest member, so the first maximum wins ties
    const auto largest = std::max_element(
        components.begin(), components.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });

    result.original_ids.reserve(largest->size());
    for (NodeId local : *largest) result.original_ids.push_back(keep[local]);
    result.graph = g.induced(result.original_ids);
    if (result.graph.num_edges() == 0)
        throw EmptyGraphError("largest covered component has no edge");

    std::vector<std::vector<NodeId>> clusters;
    for (const auto& community : truth) {
        std::vector<NodeId> members;
        for (const auto& label : community)
            if (auto id = result.graph.find(label)) members.push_back(*id);
        if (!members.empty()) clusters.push_back(std::move(members));
    }
    result.truth = Cover::from_clusters(result.graph.num_nodes(), std::move(clusters));
    return result;
}

} // namespace commeval
