#include "commeval/detect.hpp"

#include "commeval/error.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace commeval {

namespace {

// Modularity gain of a merge scaled by 2m^2 to stay integral:
// dQ = e_ab / m - vol_a vol_b / (2 m^2)  =>  2 m e_ab - vol_a vol_b.
std::int64_t scaled_gain(std::int64_t two_m, std::int64_t between, std::int64_t vol_a,
                         std::int64_t vol_b) {
    return two_m * between - vol_a * vol_b;
}

} // namespace

Cover cnm_greedy(const Graph& g, const DetectionSpec& spec) {
    spec.validate();
    if (g.num_edges() == 0) throw UndefinedInputError("cnm needs at least one edge");
    const std::size_t n = g.num_nodes();
    const auto two_m = static_cast<std::int64_t>(2 * g.num_edges());

    // Communities are named after their smallest member, which is also the
    // name that survives a merge.
    std::vector<std::int64_t> volume(n);
    std::vector<std::map<NodeId, std::int64_t>> between(n);
    std::vector<NodeId> parent(n);
    for (NodeId v = 0; v < n; ++v) {
        parent[v] = v;
        volume[v] = static_cast<std::int64_t>(g.degree(v));
        for (NodeId u : g.neighbors(v)) between[v][u] = 1;
    }

    using Key = std::tuple<std::int64_t, NodeId, NodeId>;  // (-gain, a, b), a < b
    std::set<Key> queue;
    auto key = [&](NodeId a, NodeId b) {
        if (b < a) std::swap(a, b);
        return Key{-scaled_gain(two_m, between[a].at(b), volume[a], volume[b]), a, b};
    };
    for (NodeId a = 0; a < n; ++a)
        for (auto [b, e] : between[a])
            if (a < b) queue.insert(key(a, b));

    while (!queue.empty()) {
        const auto [neg_gain, a, b] = *queue.begin();
        if (-neg_gain <= 0) break;

        for (auto [x, e] : between[a]) queue.erase(key(a, x));
        for (auto [x, e] : between[b])
            if (x != a) queue.erase(key(b, x));

        for (auto [x, e] : between[b]) {
            if (x == a) continue;
            between[a][x] += e;
            between[x].erase(b);
            between[x][a] += e;
        }
        between[a].erase(b);
        between[b].clear();
        volume[a] += volume[b];
        volume[b] = 0;
        parent[b] = a;

        for (auto [x, e] : between[a]) queue.insert(key(a, x));
    }

    std::vector<std::size_t> label(n);
    for (NodeId v = 0; v < n; ++v) {
        NodeId r = v;
        while (parent[r] != r) r = parent[r] = parent[parent[r]];
        label[v] = r;
    }
    return Cover::from_labels(label);
}

} // namespace commeval
