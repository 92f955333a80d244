#include "commeval/detect.hpp"

#include "commeval/error.hpp"
#include "commeval/rng.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace commeval {

namespace {

/// Aggregated multigraph: integer edge weights between super-nodes plus the
/// number of original edges folded inside each super-node.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adjacency;
    std::vector<std::int64_t> inner;

    std::size_t size() const { return adjacency.size(); }

    std::int64_t degree(std::size_t v) const {
        std::int64_t d = 2 * inner[v];
        for (auto [u, w] : adjacency[v]) d += w;
        return d;
    }
};

LevelGraph from_graph(const Graph& g) {
    LevelGraph lg;
    lg.adjacency.resize(g.num_nodes());
    lg.inner.assign(g.num_nodes(), 0);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (NodeId u : g.neighbors(v)) lg.adjacency[v].emplace_back(u, 1);
    return lg;
}

// One level of local moving. Returns true when any node changed community.
// Gains are scaled by 2m: 2m * w(v, D) - tot(D) * k(v).
bool local_moves(const LevelGraph& lg, std::int64_t two_m, std::span<const std::size_t> order,
                 std::vector<std::size_t>& community) {
    const std::size_t n = lg.size();
    std::vector<std::int64_t> degree(n), total(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = lg.degree(v);
        total[community[v]] += degree[v];
    }

    std::vector<std::int64_t> weight_to(n, 0);
    std::vector<std::size_t> touched;
    bool any = false;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t v : order) {
            const std::size_t own = community[v];
            touched.clear();
            for (auto [u, w] : lg.adjacency[v]) {
                const std::size_t c = community[u];
                if (weight_to[c] == 0) touched.push_back(c);
                weight_to[c] += w;
            }
            total[own] -= degree[v];

            std::size_t best = own;
            std::int64_t best_gain = two_m * weight_to[own] - total[own] * degree[v];
            for (std::size_t c : touched) {
                const std::int64_t gain = two_m * weight_to[c] - total[c] * degree[v];
                if (gain > best_gain) {
                    best_gain = gain;
                    best = c;
                }
            }
            total[best] += degree[v];
            community[v] = best;
            if (best != own) moved = any = true;
            for (std::size_t c : touched) weight_to[c] = 0;
        }
    }
    return any;
}

// Renumbers communities 0..k-1 by first occurrence and returns k.
std::size_t compact(std::vector<std::size_t>& community) {
    std::vector<std::size_t> remap(community.size(), community.size());
    std::size_t next = 0;
    for (auto& c : community) {
        if (remap[c] == community.size()) remap[c] = next++;
        c = remap[c];
    }
    return next;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& community,
                     std::size_t count) {
    LevelGraph next;
    next.adjacency.resize(count);
    next.inner.assign(count, 0);
    std::vector<std::map<std::size_t, std::int64_t>> links(count);
    for (std::size_t v = 0; v < lg.size(); ++v) {
        const std::size_t cv = community[v];
        next.inner[cv] += lg.inner[v];
        for (auto [u, w] : lg.adjacency[v]) {
            const std::size_t cu = community[u];
            if (cu == cv) {
                if (v < u) next.inner[cv] += w;
            } else {
                links[cv][cu] += w;
            }
        }
    }
    for (std::size_t c = 0; c < count; ++c)
        next.adjacency[c].assign(links[c].begin(), links[c].end());
    return next;
}

} // namespace

Cover louvain(const Graph& g, const DetectionSpec& spec, LouvainTrace* trace) {
    spec.validate();
    if (g.num_edges() == 0) throw UndefinedInputError("louvain needs at least one edge");
    const auto two_m = static_cast<std::int64_t>(2 * g.num_edges());

    Rng rng(spec.seed);
    LevelGraph level = from_graph(g);
    std::vector<std::size_t> assignment(g.num_nodes());
    std::iota(assignment.begin(), assignment.end(), std::size_t{0});
    std::size_t levels = 0;

    while (true) {
        std::vector<std::size_t> order(level.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(std::span<std::size_t>(order));

        std::vector<std::size_t> community(level.size());
        std::iota(community.begin(), community.end(), std::size_t{0});
        if (!local_moves(level, two_m, order, community)) break;

        const std::size_t count = compact(community);
        for (auto& a : assignment) a = community[a];
        level = aggregate(level, community, count);
        ++levels;
    }

    if (trace) {
        // every super-node of the final level is one community
        const double m = static_cast<double>(g.num_edges());
        double q = 0.0;
        for (std::size_t c = 0; c < level.size(); ++c) {
            const double share = static_cast<double>(level.degree(c)) / (2.0 * m);
            q += static_cast<double>(level.inner[c]) / m - share * share;
        }
        trace->modularity = q;
        trace->levels = levels;
    }
    return Cover::from_labels(assignment);
}

} // namespace commeval
