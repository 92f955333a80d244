#include "commeval/quality.hpp"

#include "commeval/error.hpp"
#include "commeval/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace commeval {

std::string_view to_string(Quality q) noexcept {
    switch (q) {
    case Quality::clustering_coefficient: return "clustering_coefficient";
    case Quality::permanence: return "permanence";
    case Quality::flake_odf: return "flake_odf";
    case Quality::fomd: return "fomd";
    case Quality::cut_ratio: return "cut_ratio";
    case Quality::conductance: return "conductance";
    case Quality::compactness: return "compactness";
    case Quality::modularity: return "modularity";
    case Quality::surprise: return "surprise";
    case Quality::significance: return "significance";
    }
    return "?";
}

std::optional<Quality> parse_quality(std::string_view name) noexcept {
    for (Quality q : all_qualities)
        if (to_string(q) == name) return q;
    return std::nullopt;
}

std::size_t hoeffding_sample_size(double epsilon, double p) {
    if (!(epsilon > 0.0) || !(p > 0.0) || !(p < 2.0))
        throw std::invalid_argument("hoeffding_sample_size needs epsilon > 0 and 0 < p < 2");
    const double bound = std::log(p / 2.0) / (-2.0 * epsilon * epsilon);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(bound)));
}

void SamplingPlan::validate() const {
    const std::size_t needed = hoeffding_sample_size(epsilon, confidence_p);
    if (sample_count < needed)
        throw std::invalid_argument("sample count " + std::to_string(sample_count) +
                                    " is below the Hoeffding bound " + std::to_string(needed));
}

double kl_two_point(double x, double y) noexcept {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (x == y) return 0.0;
    double d = 0.0;
    if (x > 0.0) d += y > 0.0 ? x * std::log(x / y) : inf;
    if (x < 1.0) d += y < 1.0 ? (1.0 - x) * std::log((1.0 - x) / (1.0 - y)) : inf;
    return std::max(d, 0.0);
}

namespace {

double binom2(std::size_t k) { return 0.5 * static_cast<double>(k) * static_cast<double>(k - (k > 0)); }

std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
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

/// Vertex-level scoring with the graph-wide quantities computed once.
class VertexScorer {
public:
    VertexScorer(const Graph& g, const Cover& cover)
        : g_(g), cover_(cover), median_(graph_stats(g).median_degree) {}

    double score(Quality metric, NodeId v) {
        count_neighbor_memberships(v);
        const auto memberships = cover_.memberships(v);
        double total = 0.0;
        for (std::size_t c : memberships) total += membership_score(metric, v, c);
        return total / static_cast<double>(memberships.size());
    }

private:
    // (cluster, number of v's neighbors in it), sorted by cluster.
    void count_neighbor_memberships(NodeId v) {
        scratch_.clear();
        for (NodeId u : g_.neighbors(v))
            for (std::size_t c : cover_.memberships(u)) scratch_.push_back(c);
        std::sort(scratch_.begin(), scratch_.end());
        counts_.clear();
        for (std::size_t c : scratch_) {
            if (!counts_.empty() && counts_.back().first == c)
                ++counts_.back().second;
            else
                counts_.emplace_back(c, 1);
        }
    }

    std::size_t internal_degree(std::size_t c) const {
        auto it = std::lower_bound(counts_.begin(), counts_.end(), std::pair<std::size_t, std::size_t>{c, 0});
        return it != counts_.end() && it->first == c ? it->second : 0;
    }

    double clustering(NodeId v, std::size_t c) {
        const auto members = cover_.cluster(c);
        inside_.clear();
        for (NodeId u : g_.neighbors(v))
            if (std::binary_search(members.begin(), members.end(), u)) inside_.push_back(u);
        const std::size_t s = inside_.size();
        if (s < 2) return 0.0;
        std::size_t ordered_pairs = 0;
        for (NodeId u : inside_) ordered_pairs += sorted_intersection_size(g_.neighbors(u), inside_);
        return static_cast<double>(ordered_pairs) / (static_cast<double>(s) * static_cast<double>(s - 1));
    }

    double membership_score(Quality metric, NodeId v, std::size_t c) {
        const std::size_t inside = internal_degree(c);
        const std::size_t degree = g_.degree(v);
        switch (metric) {
        case Quality::clustering_coefficient: return clustering(v, c);
        case Quality::flake_odf: return inside > degree - inside ? 1.0 : 0.0;
        case Quality::fomd: return static_cast<double>(inside) > median_ ? 1.0 : 0.0;
        case Quality::permanence: {
            if (degree == 0) return clustering(v, c) - 1.0;
            std::size_t strongest_other = 1;
            for (auto [other, n] : counts_)
                if (other != c) strongest_other = std::max(strongest_other, n);
            return static_cast<double>(inside) /
                       (static_cast<double>(strongest_other) * static_cast<double>(degree)) +
                   clustering(v, c) - 1.0;
        }
        default: throw std::invalid_argument("not a vertex-level quality");
        }
    }

    const Graph& g_;
    const Cover& cover_;
    double median_;
    std::vector<std::size_t> scratch_;
    std::vector<std::pair<std::size_t, std::size_t>> counts_;
    std::vector<NodeId> inside_;
};

QualityScore exact_vertex_average(const Graph& g, const Cover& cover, Quality metric) {
    if (!is_vertex_level(metric)) throw std::invalid_argument("not a vertex-level quality");
    VertexScorer scorer(g, cover);
    double total = 0.0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) total += scorer.score(metric, v);
    QualityScore s{metric};
    s.value = g.num_nodes() ? total / static_cast<double>(g.num_nodes()) : 0.0;
    return s;
}

void require_edges(const Graph& g, std::string_view what) {
    if (g.num_edges() == 0)
        throw UndefinedInputError(std::string(what) + " is undefined on a graph without edges");
}

} // namespace

double vertex_score(const Graph& g, const Cover& cover, Quality metric, NodeId v) {
    if (!is_vertex_level(metric)) throw std::invalid_argument("not a vertex-level quality");
    return VertexScorer(g, cover).score(metric, v);
}

QualityScore clustering_coefficient(const Graph& g, const Cover& cover) {
    return exact_vertex_average(g, cover, Quality::clustering_coefficient);
}

QualityScore permanence(const Graph& g, const Cover& cover) {
    return exact_vertex_average(g, cover, Quality::permanence);
}

QualityScore flake_odf(const Graph& g, const Cover& cover) {
    return exact_vertex_average(g, cover, Quality::flake_odf);
}

QualityScore fomd(const Graph& g, const Cover& cover) {
    return exact_vertex_average(g, cover, Quality::fomd);
}

// Cluster weights are k_C over the total membership count, which is n for a
// partition and keeps overlapping covers inside [0, 1].
static double membership_total(const Cover& cover) {
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) total += static_cast<double>(cover.cluster(c).size());
    return total;
}

QualityScore cut_ratio(const Graph& g, const Cover& cover) {
    const double n = static_cast<double>(g.num_nodes());
    const double weight = membership_total(cover);
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c, false);
        const double k = static_cast<double>(view.size);
        // a cluster spanning V has no possible external edge
        const double kept = view.size == g.num_nodes()
                                ? 1.0
                                : 1.0 - static_cast<double>(view.cut) / (k * (n - k));
        total += kept * k / weight;
    }
    return {Quality::cut_ratio, total};
}

QualityScore conductance(const Graph& g, const Cover& cover) {
    const double weight = membership_total(cover);
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c, false);
        if (view.volume == 0) continue;
        total += (1.0 - static_cast<double>(view.cut) / static_cast<double>(view.volume)) *
                 static_cast<double>(view.size) / weight;
    }
    return {Quality::conductance, total};
}

QualityScore compactness(const Graph& g, const Cover& cover) {
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c);
        total += static_cast<double>(view.internal_edges) /
                 static_cast<double>(std::max<std::size_t>(1, view.diameter));
    }
    return {Quality::compactness, total};
}

QualityScore modularity(const Graph& g, const Cover& cover) {
    require_edges(g, "modularity");
    const double m = static_cast<double>(g.num_edges());
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c, false);
        const double share = static_cast<double>(view.volume) / (2.0 * m);
        total += static_cast<double>(view.internal_edges) / m - share * share;
    }
    return {Quality::modularity, total};
}

QualityScore surprise(const Graph& g, const Cover& cover) {
    require_edges(g, "surprise");
    if (g.num_nodes() < 2) throw UndefinedInputError("surprise needs at least two nodes");
    double internal = 0.0;
    double pairs = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c, false);
        internal += static_cast<double>(view.internal_edges);
        pairs += binom2(view.size);
    }
    // overlapping covers can count an edge or a pair more than once
    const double observed = std::min(1.0, internal / static_cast<double>(g.num_edges()));
    const double expected = std::min(1.0, pairs / binom2(g.num_nodes()));
    return {Quality::surprise, kl_two_point(observed, expected)};
}

QualityScore significance(const Graph& g, const Cover& cover) {
    require_edges(g, "significance");
    if (g.num_nodes() < 2) throw UndefinedInputError("significance needs at least two nodes");
    const double density = static_cast<double>(g.num_edges()) / binom2(g.num_nodes());
    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const ClusterView view = cluster_view(g, cover, c, false);
        if (view.size < 2) continue;
        const double pairs = binom2(view.size);
        total += pairs * kl_two_point(static_cast<double>(view.internal_edges) / pairs, density);
    }
    return {Quality::significance, total};
}

QualityScore sampled_vertex_average(const Graph& g, const Cover& cover, Quality metric,
                                    const SamplingPlan& plan) {
    if (!is_vertex_level(metric)) throw std::invalid_argument("not a vertex-level quality");
    if (g.num_nodes() <= plan.sample_count) return exact_vertex_average(g, cover, metric);

    VertexScorer scorer(g, cover);
    Rng rng(plan.rng_seed);
    double total = 0.0;
    for (std::size_t i = 0; i < plan.sample_count; ++i)
        total += scorer.score(metric, static_cast<NodeId>(rng.below(g.num_nodes())));

    QualityScore s{metric};
    s.value = total / static_cast<double>(plan.sample_count);
    s.mode = EvalMode::sampled;
    s.sample_count = plan.sample_count;
    s.seed = plan.rng_seed;
    return s;
}

QualityScore evaluate(const Graph& g, const Cover& cover, Quality metric) {
    switch (metric) {
    case Quality::clustering_coefficient:
    case Quality::permanence:
    case Quality::flake_odf:
    case Quality::fomd: return exact_vertex_average(g, cover, metric);
    case Quality::cut_ratio: return cut_ratio(g, cover);
    case Quality::conductance: return conductance(g, cover);
    case Quality::compactness: return compactness(g, cover);
    case Quality::modularity: return modularity(g, cover);
    case Quality::surprise: return surprise(g, cover);
    case Quality::significance: return significance(g, cover);
    }
    throw std::invalid_argument("unknown quality");
}

QualityScore evaluate(const Graph& g, const Cover& cover, Quality metric, const SamplingPlan& plan) {
    if (is_vertex_level(metric)) return sampled_vertex_average(g, cover, metric, plan);
    return evaluate(g, cover, metric);
}

} // namespace commeval
