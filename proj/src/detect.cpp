#include "commeval/detect.hpp"

#include <stdexcept>

namespace commeval {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::louvain: return "louvain";
    case Algorithm::cnm: return "cnm";
    case Algorithm::label_propagation: return "label_propagation";
    case Algorithm::k_core: return "k_core";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "louvain") return Algorithm::louvain;
    if (name == "cnm") return Algorithm::cnm;
    if (name == "label_propagation" || name == "lp") return Algorithm::label_propagation;
    if (name == "k_core" || name == "kcore") return Algorithm::k_core;
    return std::nullopt;
}

void DetectionSpec::validate() const {
    if (k < 2) throw std::invalid_argument("k-core order must be at least 2");
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be at least 1");
}

std::string DetectionSpec::tag() const {
    switch (algorithm) {
    case Algorithm::k_core: return "k_core-k" + std::to_string(k);
    case Algorithm::cnm: return "cnm";
    default: return std::string(to_string(algorithm)) + "-s" + std::to_string(seed);
    }
}

Cover detect(const Graph& g, const DetectionSpec& spec) {
    spec.validate();
    switch (spec.algorithm) {
    case Algorithm::louvain: return louvain(g, spec);
    case Algorithm::cnm: return cnm_greedy(g, spec);
    case Algorithm::label_propagation: return label_propagation(g, spec);
    case Algorithm::k_core: return k_core_communities(g, spec);
    }
    throw std::invalid_argument("unknown algorithm");
}

LabeledCover import_clustering(const std::filesystem::path& path, const Graph& g) {
    LabeledCover out;
    out.cover = load_cover(path, g, &out.load_report);
    out.id = path.stem().string();
    out.provenance = "import:" + path.filename().string();
    return out;
}

} // namespace commeval
