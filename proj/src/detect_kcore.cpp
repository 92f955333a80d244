#include "commeval/detect.hpp"

#include <vector>

namespace commeval {

Cover k_core_communities(const Graph& g, const DetectionSpec& spec) {
    spec.validate();
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    std::vector<NodeId> stack;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] < spec.k) {
            removed[v] = true;
            stack.push_back(v);
        }
    }
    while (!stack.empty()) {
        const NodeId v = stack.back();
        stack.pop_back();
        for (NodeId u : g.neighbors(v)) {
            if (removed[u]) continue;
            if (--degree[u] < spec.k) {
                removed[u] = true;
                stack.push_back(u);
            }
        }
    }

    std::vector<NodeId> core;
    for (NodeId v = 0; v < n; ++v)
        if (!removed[v]) core.push_back(v);
    if (core.empty()) return Cover::singletons(n);

    std::vector<std::vector<NodeId>> clusters;
    for (auto& component : connected_components(g.induced(core))) {
        for (NodeId& v : component) v = core[v];
        clusters.push_back(std::move(component));
    }
    return Cover::from_clusters(n, std::move(clusters));
}

} // namespace commeval
