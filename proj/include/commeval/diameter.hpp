#pragma once

#include "commeval/cover.hpp"
#include "commeval/graph.hpp"

#include <cstddef>
#include <span>

namespace commeval {

struct DiameterEstimate {
    std::size_t diameter = 0;
    /// The members did not induce a connected subgraph; the estimate covers
    /// the component of the smallest member only.
    bool disconnected = false;
};

/// Double-BFS lower bound on the diameter of the subgraph induced by
/// `members` (sorted ascending). The first sweep starts at the smallest
/// member; the second starts at the last node the first one reached.
DiameterEstimate approx_diameter(const Graph& g, std::span<const NodeId> members);

inline DiameterEstimate approx_diameter(const Graph& g, const Cover& cover, std::size_t c) {
    return approx_diameter(g, cover.cluster(c));
}

} // namespace commeval
