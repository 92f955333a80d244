#include "commeval/compare.hpp"

#include "commeval/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace commeval {

std::string_view to_string(CompareMetric m) noexcept {
    switch (m) {
    case CompareMetric::fb3: return "fb3";
    case CompareMetric::onmi: return "onmi";
    }
    return "?";
}

std::optional<CompareMetric> parse_compare_metric(std::string_view name) noexcept {
    if (name == "fb3") return CompareMetric::fb3;
    if (name == "onmi" || name == "nmi") return CompareMetric::onmi;
    return std::nullopt;
}

namespace {

void require_same_nodes(const Cover& c, const Cover& l) {
    if (c.num_nodes() != l.num_nodes())
        throw MismatchError("covers range over " + std::to_string(c.num_nodes()) + " and " +
                            std::to_string(l.num_nodes()) + " nodes");
}

std::size_t intersection_size(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            ++count, ++i, ++j;
    }
    return count;
}

// -p log2 p, with h(0) = 0, on a count out of n.
double h(std::size_t count, std::size_t n) {
    if (count == 0) return 0.0;
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return -p * std::log2(p);
}

double entropy(std::size_t size, std::size_t n) { return h(size, n) + h(n - size, n); }

// Normalized H(X|Y) averaged over the clusters of x.
double normalized_conditional_entropy(const Cover& x, const Cover& y) {
    const std::size_t n = x.num_nodes();
    std::vector<std::size_t> big_y;
    for (std::size_t l = 0; l < y.size(); ++l)
        if (2 * y.cluster(l).size() > n) big_y.push_back(l);

    std::vector<std::size_t> overlap(y.size(), 0);
    std::vector<std::size_t> touched;
    double total = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto xk = x.cluster(k);
        const double hx = entropy(xk.size(), n);
        if (hx == 0.0) continue;  // X_k spans every node: matched by convention

        touched.clear();
        for (NodeId v : xk)
            for (std::size_t l : y.memberships(v))
                if (overlap[l]++ == 0) touched.push_back(l);

        // A pair can only pass the matching condition when the clusters
        // intersect or one of them holds more than half of the nodes.
        std::vector<std::size_t> candidates = touched;
        if (2 * xk.size() > n) {
            candidates.resize(y.size());
            for (std::size_t l = 0; l < y.size(); ++l) candidates[l] = l;
        } else {
            candidates.insert(candidates.end(), big_y.begin(), big_y.end());
        }

        double best = hx;
        for (std::size_t l : candidates) {
            const std::size_t both = overlap[l];
            const std::size_t only_x = xk.size() - both;
            const std::size_t only_y = y.cluster(l).size() - both;
            const std::size_t neither = n - xk.size() - only_y;
            const double h11 = h(both, n), h10 = h(only_x, n), h01 = h(only_y, n), h00 = h(neither, n);
            if (h11 + h00 < h01 + h10) continue;
            best = std::min(best, h11 + h10 + h01 + h00 - entropy(y.cluster(l).size(), n));
        }
        for (std::size_t l : touched) overlap[l] = 0;
        total += std::max(0.0, best) / hx;
    }
    return total / static_cast<double>(x.size());
}

} // namespace

double bcubed_precision(const Cover& c, const Cover& l) {
    require_same_nodes(c, l);
    const std::size_t n = c.num_nodes();
    if (n == 0) return 1.0;

    std::vector<std::size_t> stamp(n, std::numeric_limits<std::size_t>::max());
    std::vector<NodeId> associates;
    double total = 0.0;
    for (NodeId e = 0; e < n; ++e) {
        associates.clear();
        for (std::size_t k : c.memberships(e))
            for (NodeId other : c.cluster(k))
                if (stamp[other] != e) {
                    stamp[other] = e;
                    associates.push_back(other);
                }
        double inner = 0.0;
        for (NodeId other : associates) {
            const std::size_t in_c = intersection_size(c.memberships(e), c.memberships(other));
            const std::size_t in_l = intersection_size(l.memberships(e), l.memberships(other));
            inner += static_cast<double>(std::min(in_c, in_l)) / static_cast<double>(in_c);
        }
        total += inner / static_cast<double>(associates.size());
    }
    return total / static_cast<double>(n);
}

ComparisonResult fb3(const Cover& c, const Cover& l) {
    ComparisonResult r;
    r.metric = CompareMetric::fb3;
    const double precision = bcubed_precision(c, l);
    const double recall = bcubed_precision(l, c);
    r.precision = precision;
    r.recall = recall;
    // operand order fixed so that F(c, l) and F(l, c) agree bit for bit
    const double lo = std::min(precision, recall);
    const double hi = std::max(precision, recall);
    r.value = hi > 0.0 ? 2.0 * lo * hi / (lo + hi) : 0.0;
    return r;
}

ComparisonResult onmi(const Cover& c, const Cover& l) {
    require_same_nodes(c, l);
    if (c.size() == 0 || l.size() == 0) throw InvalidCoverError("onmi needs non-empty covers");
    const double x_given_y = normalized_conditional_entropy(c, l);
    const double y_given_x = normalized_conditional_entropy(l, c);
    ComparisonResult r;
    r.metric = CompareMetric::onmi;
    r.value = std::clamp(1.0 - 0.5 * (x_given_y + y_given_x), 0.0, 1.0);
    return r;
}

ComparisonResult compare(const Cover& c, const Cover& l, CompareMetric metric) {
    return metric == CompareMetric::fb3 ? fb3(c, l) : onmi(c, l);
}

} // namespace commeval
