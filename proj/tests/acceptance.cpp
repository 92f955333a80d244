// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "commeval/compare.hpp"
#include "commeval/detect.hpp"
#include "commeval/diameter.hpp"
#include "commeval/pipeline.hpp"
#include "commeval/quality.hpp"
#include "commeval/spearman.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

using namespace commeval;

namespace {

const std::filesystem::path data_dir{COMMEVAL_DATA_DIR};

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string num(double x) {
    std::ostringstream s;
    s.precision(17);
    s << x;
    return s.str();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

PipelineConfig football_config(std::size_t copies, const std::filesystem::path& out) {
    PipelineConfig config;
    for (std::size_t i = 0; i < copies; ++i) {
        GraphInput g;
        g.id = "football" + std::to_string(i + 1);
        g.edges = data_dir / "football/football.edges";
        g.truth = data_dir / "football/football.cmty";
        config.graphs.push_back(g);
    }
    config.detections = default_detections();
    config.out_dir = out;
    config.inject_truth = true;
    return config;
}

Outcome barbell_suite() {
    Outcome o;
    const auto start = Clock::now();
    const Graph g = oracle::barbell();
    const Cover p = oracle::barbell_triangles();
    const std::vector<std::pair<Quality, double>> expected{
        {Quality::modularity, 5.0 / 14.0},
        {Quality::conductance, 6.0 / 7.0},
        {Quality::cut_ratio, 8.0 / 9.0},
        {Quality::compactness, 6.0},
        {Quality::permanence, 8.0 / 9.0},
        {Quality::clustering_coefficient, 1.0},
        {Quality::flake_odf, 1.0},
        {Quality::fomd, 0.0},
        {Quality::significance, 6.0 * std::log(15.0 / 7.0)},
        // D(6/7 || 0.4) evaluated by an independent script
        {Quality::surprise, 0.4482508267131511},
    };
    for (auto [q, want] : expected) {
        const double got = evaluate(g, p, q).value;
        o.check(std::abs(got - want) <= 1e-9,
                std::string(to_string(q)) + " = " + num(got) + ", expected " + num(want));
    }
    const double t = seconds_since(start);
    o.check(t < 1.0, "took " + num(t) + " s");
    if (o.pass) o.detail = "10 functions within 1e-9 in " + num(t) + " s";
    return o;
}

Outcome brute_force() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t graphs = 0, partitions = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<Edge> all;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::size_t mask = 1; mask < (std::size_t{1} << all.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) edges.push_back(all[i]);
            const Graph g = Graph::from_edges(n, edges);
            if (connected_components(g).size() != 1) continue;
            ++graphs;
            std::vector<Cover> covers;
            std::vector<std::vector<std::size_t>> labelings;
            oracle::for_each_partition(n, [&](const std::vector<std::size_t>& labels) {
                labelings.push_back(labels);
                covers.push_back(Cover::from_clusters(n, oracle::clusters_of(labels)));
            });
            for (std::size_t i = 0; i < covers.size(); ++i) {
                ++partitions;
                const double q = modularity(g, covers[i]).value;
                const double want = oracle::modularity(g, labelings[i]);
                o.check(std::abs(q - want) <= 1e-12, "modularity mismatch " + num(q) + " vs " + num(want));
                o.check(q >= -0.5 && q < 1.0, "modularity outside [-1/2, 1)");
            }
        }
        // fb3 depends on the covers alone: every ordered pair of partitions of n nodes
        std::vector<Cover> covers;
        oracle::for_each_partition(n, [&](const std::vector<std::size_t>& labels) {
            covers.push_back(Cover::from_clusters(n, oracle::clusters_of(labels)));
        });
        for (const Cover& a : covers)
            for (const Cover& b : covers) {
                const double f = fb3(a, b).value;
                const double want = oracle::fb3(a, b);
                o.check(std::abs(f - want) <= 1e-12, "fb3 mismatch " + num(f) + " vs " + num(want));
            }
    }
    const double t = seconds_since(start);
    o.check(t < 60.0, "took " + num(t) + " s");
    if (o.pass)
        o.detail = std::to_string(graphs) + " connected graphs, " + std::to_string(partitions) + " partitions in " +
                   num(t) + " s";
    return o;
}

Outcome identities() {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + trial % 40;
        const Cover x = oracle::random_cover(n, 1 + trial % 9, 1 + trial % 3, rng);
        const double on = onmi(x, x).value;
        const double fb = fb3(x, x).value;
        o.check(std::abs(on - 1.0) <= 1e-12, "onmi(X,X) = " + num(on));
        o.check(fb == 1.0, "fb3(X,X) = " + num(fb));
        const Cover l = oracle::random_cover(n, 1 + trial % 5, 1 + trial % 2, rng);
        o.check(*fb3(x, l).recall == *fb3(l, x).precision, "recall(C,L) != precision(L,C)");
    }
    if (o.pass) o.detail = "100 random covers";
    return o;
}

Outcome hoeffding() {
    Outcome o;
    const std::size_t bound = hoeffding_sample_size(0.02, 0.05);
    o.check(bound <= 5000, "bound " + std::to_string(bound) + " exceeds 5000");

    std::mt19937_64 rng(4);
    const Graph g = oracle::planted_partition(20000, 200, 10, 3, rng);
    std::vector<std::size_t> labels(g.num_nodes());
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = v / 100;
    const Cover c = Cover::from_labels(labels);
    double worst = 0.0;
    for (Quality q : {Quality::clustering_coefficient, Quality::permanence, Quality::flake_odf, Quality::fomd}) {
        const double exact = evaluate(g, c, q).value;
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            SamplingPlan plan;
            plan.rng_seed = 1000 + trial;
            const QualityScore s = sampled_vertex_average(g, c, q, plan);
            o.check(s.mode == EvalMode::sampled && s.sample_count == 5000, "sampling was not applied");
            worst = std::max(worst, std::abs(s.value - exact));
        }
    }
    o.check(worst <= 0.02, "worst deviation " + num(worst));
    if (o.pass)
        o.detail = "bound " + std::to_string(bound) + ", worst deviation " + num(worst) + " over 4 functions x 20 trials";
    return o;
}

Outcome football() {
    Outcome o;
    const auto out = std::filesystem::temp_directory_path() / "commeval_acceptance_football";
    std::filesystem::remove_all(out);
    PipelineConfig config = football_config(1, out);
    const auto start = Clock::now();
    const ReportBundle bundle = run_pipeline(config);
    write_report(bundle, config, out);
    const double t = seconds_since(start);
    o.check(t < 10.0, "took " + num(t) + " s");
    o.check(bundle.graphs.size() == 1, "football was skipped");
    if (!o.pass) return o;
    const GraphReport& r = bundle.graphs[0];
    o.check(r.num_nodes == 115 && r.num_edges == 613, "unexpected football size");
    for (const auto& gold : r.gold) {
        const auto it = std::find(gold.clustering_ids.begin(), gold.clustering_ids.end(), "ground_truth");
        o.check(it != gold.clustering_ids.end(), "ground truth not injected");
        if (it != gold.clustering_ids.end()) {
            const double v = gold.results[static_cast<std::size_t>(it - gold.clustering_ids.begin())].value;
            o.check(v == 1.0, std::string(to_string(gold.metric)) + " of ground truth = " + num(v));
        }
    }

    // the comparison metric's own column in the written CSV
    std::istringstream csv(slurp(out / "quality_correlations.csv"));
    std::string line;
    std::getline(csv, line);
    std::vector<std::string> header;
    for (std::istringstream h(line); std::getline(h, line, ',');) header.push_back(line);
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        std::vector<std::string> fields;
        for (std::istringstream f(line); std::getline(f, line, ',');) fields.push_back(line);
        const auto col = std::find(header.begin(), header.end(), fields[1]);
        o.check(col != header.end(), "no column for " + fields[1]);
        if (col == header.end()) break;
        const std::string cell = fields[static_cast<std::size_t>(col - header.begin())];
        o.check(cell != "NA" && std::stod(cell) == 1.0, fields[1] + " self-correlation = " + cell);
        ++rows;
    }
    o.check(rows == 2, "expected one row per comparison metric");
    std::filesystem::remove_all(out);
    if (o.pass) o.detail = "n=115 m=613, 5 clusterings, " + num(t) + " s";
    return o;
}

Outcome spearman_checks() {
    Outcome o;
    auto rho = [](std::vector<double> a, std::vector<double> b) {
        return spearman(std::span<const double>(a), std::span<const double>(b));
    };
    o.check(rho({3, 1, 2}, {3, 1, 2}) == 1.0, "identical ranking");
    o.check(rho({1, 2, 3}, {3, 2, 1}) == -1.0, "reversal");
    o.check(rho({1, 2, 3}, {2, 1, 3}) == 0.5, "0.5 case");

    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-5, 5);
    std::uniform_int_distribution<int> tie(0, 3);
    std::uniform_int_distribution<std::size_t> len(2, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> a(len(rng)), b(a.size());
        for (auto& x : a) x = trial % 4 == 0 ? tie(rng) : u(rng);
        for (auto& x : b) x = trial % 5 == 0 ? tie(rng) : u(rng);
        std::vector<double> fa, fb;
        for (double x : a) fa.push_back(std::atan(x) * 3 + 1);
        for (double x : b) fb.push_back(std::exp(x / 2));
        const auto r1 = rho(a, b), r2 = rho(fa, fb);
        o.check(r1.has_value() == r2.has_value(), "definedness changed under a monotone transform");
        if (r1 && r2) o.check(std::abs(*r1 - *r2) <= 1e-12, "coefficient changed under a monotone transform");
    }
    if (o.pass) o.detail = "3 examples exact, 1000 monotone-transform pairs";
    return o;
}

Outcome context_structure() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<QualityCorrelationRow> rows;
    for (int g = 0; g < 6; ++g) {
        QualityCorrelationRow row;
        row.graph_id = "g" + std::to_string(g);
        row.metric = CompareMetric::fb3;
        for (Quality q : all_qualities) {
            row.columns.emplace_back(to_string(q));
            row.coefficients.push_back(u(rng));
        }
        row.columns.emplace_back("onmi");
        row.coefficients.push_back(u(rng));
        row.columns.emplace_back("fb3");
        row.coefficients.push_back(1.0);
        rows.push_back(row);
    }
    const ContextMatrix m = context_matrix(rows);
    o.check(m.values == m.values.transpose(), "not symmetric");
    o.check(m.values.diagonal() == Eigen::VectorXd::Ones(6), "diagonal not 1");
    o.check(m.values.maxCoeff() <= 1.0 && m.values.minCoeff() >= -1.0, "entry outside [-1,1]");

    const ReportBundle bundle = run_pipeline(football_config(2, "unused"));
    o.check(bundle.contexts.size() == 2, "expected two context matrices");
    for (const auto& ctx : bundle.contexts) {
        o.check(ctx.values.rows() == 2 && !ctx.missing(0, 1), "missing off-diagonal cell");
        o.check(ctx.values(0, 1) == 1.0 && ctx.values(1, 0) == 1.0,
                std::string(to_string(ctx.metric)) + " off-diagonal = " + num(ctx.values(0, 1)));
        o.check(ctx.values(0, 0) == 1.0 && ctx.values(1, 1) == 1.0, "diagonal not 1");
    }
    if (o.pass) o.detail = "random 6x6 structure; two football copies give 1.00 off the diagonal";
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto base = std::filesystem::temp_directory_path() / "commeval_acceptance_determinism";
    std::filesystem::remove_all(base);
    PipelineConfig first = football_config(2, base / "a");
    first.sampling.sample_count = 5000;
    first.sampling.rng_seed = 17;
    PipelineConfig second = first;
    second.out_dir = base / "b";
    second.jobs = 2;
    write_report(run_pipeline(first), first, first.out_dir);
    write_report(run_pipeline(second), second, second.out_dir);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(first.out_dir)) {
        const auto name = entry.path().filename();
        if (name.extension() != ".csv") continue;
        ++files;
        o.check(slurp(entry.path()) == slurp(second.out_dir / name), name.string() + " differs");
    }
    o.check(files == 5, "expected 5 CSV files, found " + std::to_string(files));
    std::filesystem::remove_all(base);
    if (o.pass) o.detail = std::to_string(files) + " CSV files byte-identical across runs";
    return o;
}

Outcome diameters() {
    Outcome o;
    auto check_exact = [&](const Graph& g) {
        std::vector<NodeId> all(g.num_nodes());
        std::iota(all.begin(), all.end(), NodeId{0});
        const std::size_t want = oracle::exact_diameter(g, all);
        const std::size_t got = approx_diameter(g, all).diameter;
        o.check(got == want, "tree with n=" + std::to_string(g.num_nodes()) + ": " + std::to_string(got) +
                                 " vs " + std::to_string(want));
    };
    // every labelled tree up to n = 7 through its Prüfer sequence
    std::size_t trees = 0;
    for (std::size_t n = 2; n <= 7; ++n) {
        std::vector<NodeId> seq(n - 2, 0);
        while (true) {
            check_exact(oracle::pruefer_tree(seq));
            ++trees;
            std::size_t i = 0;
            while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
            if (i == seq.size()) break;
        }
    }
    // random trees up to n = 64
    std::mt19937_64 rng(9);
    for (std::size_t n = 8; n <= 64; ++n)
        for (int rep = 0; rep < 40; ++rep) {
            std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
            std::vector<NodeId> seq(n - 2);
            for (auto& x : seq) x = pick(rng);
            check_exact(oracle::pruefer_tree(seq));
            ++trees;
        }
    for (std::size_t n = 1; n <= 64; ++n) {
        check_exact(oracle::path(n));
        ++trees;
    }

    std::uniform_int_distribution<std::size_t> size(2, 12);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected(size(rng), density(rng), rng);
        std::vector<NodeId> all(g.num_nodes());
        std::iota(all.begin(), all.end(), NodeId{0});
        const std::size_t want = oracle::exact_diameter(g, all);
        const std::size_t got = approx_diameter(g, all).diameter;
        o.check(got <= want, "estimate " + std::to_string(got) + " above exact " + std::to_string(want));
    }
    if (o.pass) o.detail = std::to_string(trees) + " trees exact, 200 random graphs bounded";
    return o;
}

Outcome detection() {
    Outcome o;
    const Graph bar = oracle::barbell();
    const Cover truth = oracle::barbell_triangles();
    const auto [best, arg] = oracle::best_partition(bar);
    o.check(std::abs(best - 5.0 / 14.0) <= 1e-12, "exhaustive optimum is " + num(best));
    o.check(same_clusters(Cover::from_clusters(6, oracle::clusters_of(arg)), truth),
            "exhaustive optimum is not the two triangles");

    DetectionSpec spec;
    spec.algorithm = Algorithm::louvain;
    o.check(same_clusters(louvain(bar, spec), truth), "louvain missed the triangles");
    spec.algorithm = Algorithm::cnm;
    o.check(same_clusters(cnm_greedy(bar, spec), truth), "cnm missed the triangles");
    spec.algorithm = Algorithm::k_core;
    o.check(same_clusters(k_core_communities(bar, spec), Cover::singletons(6)), "3-core is not all singletons");
    spec.algorithm = Algorithm::label_propagation;
    const std::vector<Edge> two{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    o.check(label_propagation(Graph::from_edges(6, two), spec).size() == 2,
            "label propagation did not give two clusters");
    if (o.pass) o.detail = "louvain, cnm, 3-core and label propagation as expected";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"barbell oracle suite", barbell_suite},
        {"brute-force equivalence", brute_force},
        {"identity extremes", identities},
        {"hoeffding bound and sampling", hoeffding},
        {"football end-to-end", football},
        {"spearman correctness", spearman_checks},
        {"context-matrix structure", context_structure},
        {"determinism", determinism},
        {"diameter approximation", diameters},
        {"detection sanity", detection},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << std::endl;
    }
    return failures ? 1 : 0;
}
