#include "commeval/diameter.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace commeval {

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

struct Sweep {
    std::size_t last = 0;  // local index of the last node dequeued
    std::size_t eccentricity = 0;
    std::size_t reached = 0;
};

// BFS inside the subgraph induced by `members`; distances indexed locally.
Sweep bfs(const Graph& g, std::span<const NodeId> members, std::size_t source,
          std::vector<std::size_t>& dist, std::vector<std::size_t>& queue) {
    std::fill(dist.begin(), dist.end(), unreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (NodeId w : g.neighbors(members[u])) {
            auto it = std::lower_bound(members.begin(), members.end(), w);
            if (it == members.end() || *it != w) continue;
            const auto local = static_cast<std::size_t>(it - members.begin());
            if (dist[local] != unreached) continue;
            dist[local] = dist[u] + 1;
            queue.push_back(local);
        }
    }
    Sweep s;
    s.last = queue.back();
    s.eccentricity = dist[s.last];
    s.reached = queue.size();
    return s;
}

} // namespace

DiameterEstimate approx_diameter(const Graph& g, std::span<const NodeId> members) {
    DiameterEstimate est;
    if (members.size() <= 1) return est;

    std::vector<std::size_t> dist(members.size());
    std::vector<std::size_t> queue;
    queue.reserve(members.size());
    const Sweep first = bfs(g, members, 0, dist, queue);
    const Sweep second = bfs(g, members, first.last, dist, queue);
    est.diameter = second.eccentricity;
    est.disconnected = first.reached != members.size();
    return est;
}

} // namespace commeval
