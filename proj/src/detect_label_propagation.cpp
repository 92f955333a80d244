#include "commeval/detect.hpp"

#include "commeval/rng.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace commeval {

Cover label_propagation(const Graph& g, const DetectionSpec& spec) {
    spec.validate();
    const std::size_t n = g.num_nodes();
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});

    Rng rng(spec.seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::vector<std::size_t> count(n, 0);
    std::vector<std::size_t> seen;
    std::vector<std::size_t> best;

    for (std::size_t sweep = 0; sweep < spec.max_sweeps; ++sweep) {
        rng.shuffle(std::span<NodeId>(order));
        bool changed = false;
        for (NodeId v : order) {
            if (g.degree(v) == 0) continue;
            seen.clear();
            std::size_t top = 0;
            for (NodeId u : g.neighbors(v)) {
                if (count[label[u]]++ == 0) seen.push_back(label[u]);
                top = std::max(top, count[label[u]]);
            }
            const bool holds_majority = count[label[v]] == top;
            if (!holds_majority) {
                best.clear();
                // `seen` follows neighbor order, which is sorted, so draws are reproducible
                for (std::size_t l : seen)
                    if (count[l] == top) best.push_back(l);
                label[v] = best[rng.below(best.size())];
                changed = true;
            }
            for (std::size_t l : seen) count[l] = 0;
        }
        if (!changed) break;
    }
    return Cover::from_labels(label);
}

} // namespace commeval
