#include "commeval/graph.hpp"

#include "commeval/error.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace commeval {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
    const std::size_t n = labels.size();
    std::vector<Edge> directed;
    directed.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) continue;
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : directed) ++g.offsets_[u + 1];
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adjacency_.reserve(directed.size());
    for (auto [u, v] : directed) g.adjacency_.push_back(v);

    g.labels_ = std::move(labels);
    g.index_.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        if (!g.index_.emplace(g.labels_[v], v).second)
            throw std::invalid_argument("duplicate node label '" + g.labels_[v] + "'");
    }
    return g;
}

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
    std::vector<std::string> labels(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) labels[i] = std::to_string(i);
    return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    auto nu = neighbors(u);
    auto nv = neighbors(v);
    if (nu.size() > nv.size()) std::swap(u, v), std::swap(nu, nv);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (NodeId u = 0; u < num_nodes(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const NodeId> keep) const {
    std::vector<NodeId> remap(num_nodes(), NodeId(-1));
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = static_cast<NodeId>(i);
        labels.push_back(labels_[keep[i]]);
    }
    std::vector<Edge> sub;
    for (NodeId u : keep)
        for (NodeId v : neighbors(u))
            if (u < v && remap[v] != NodeId(-1)) sub.emplace_back(remap[u], remap[v]);
    return from_edges(std::move(labels), sub);
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.num_nodes = g.num_nodes();
    s.num_edges = g.num_edges();
    s.degrees.resize(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) s.degrees[v] = g.degree(v);
    if (s.degrees.empty()) return s;

    std::vector<std::size_t> sorted = s.degrees;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    s.median_degree = sorted.size() % 2 == 1
                          ? static_cast<double>(sorted[mid])
                          : 0.5 * static_cast<double>(sorted[mid - 1] + sorted[mid]);
    return s;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    std::vector<std::vector<NodeId>> components;
    std::vector<bool> seen(g.num_nodes(), false);
    std::deque<NodeId> queue;
    for (NodeId root = 0; root < g.num_nodes(); ++root) {
        if (seen[root]) continue;
        std::vector<NodeId> comp;
        seen[root] = true;
        queue.push_back(root);
        while (!queue.empty()) {
            const NodeId u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

namespace {

bool is_blank_or_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

} // namespace

Graph parse_edge_list(std::istream& in, bool symmetrize, std::string_view source) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b))
            throw ParseError(std::string(source), line_no, "expected two node labels");
        if (fields >> extra)
            throw ParseError(std::string(source), line_no, "unexpected third field '" + extra + "'");
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        if (u == v) continue;
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }
    if (in.bad()) throw IoError("read failure on " + std::string(source));
    if (edges.empty()) throw EmptyGraphError(std::string(source) + ": no edge");

    if (!symmetrize) {
        std::vector<std::pair<Edge, std::size_t>> keyed;
        keyed.reserve(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            keyed.push_back({{std::min(u, v), std::max(u, v)}, edge_lines[i]});
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 1; i < keyed.size(); ++i)
            if (keyed[i].first == keyed[i - 1].first)
                throw ParseError(std::string(source), keyed[i].second, "duplicate edge");
    }
    return Graph::from_edges(std::move(labels), edges);
}

Graph load_edge_list(const std::filesystem::path& path, bool symmetrize) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list " + path.string());
    return parse_edge_list(in, symmetrize, path.string());
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << g.label(u) << '\t' << g.label(v) << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_edge_list(g, out);
    if (!out) throw IoError("write failure on " + path.string());
}

RawCommunities parse_communities(std::istream& in) {
    RawCommunities out;
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        std::vector<std::string> members;
        for (std::string label; fields >> label;) members.push_back(std::move(label));
        out.push_back(std::move(members));
    }
    if (in.bad()) throw IoError("read failure on community stream");
    return out;
}

RawCommunities read_communities(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open community file " + path.string());
    return parse_communities(in);
}

} // namespace commeval
