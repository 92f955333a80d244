#include "commeval/error.hpp"
#include "commeval/pipeline.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>

namespace commeval {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class ConfigReader {
public:
    ConfigReader(std::string_view source, const std::filesystem::path& base)
        : source_(source), base_(base) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(std::string(source_) + ":" + std::to_string(line_) + ": " + what);
    }

    template <class T>
    T number(std::string_view value) const {
        T out{};
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            fail("not a number: '" + std::string(value) + "'");
        return out;
    }

    bool boolean(std::string_view value) const {
        if (value == "true" || value == "yes" || value == "1") return true;
        if (value == "false" || value == "no" || value == "0") return false;
        fail("not a boolean: '" + std::string(value) + "'");
    }

    std::filesystem::path path(std::string_view value) const {
        std::filesystem::path p{std::string(value)};
        return p.is_absolute() ? p : base_ / p;
    }

    PipelineConfig read(std::istream& in) {
        PipelineConfig config;
        std::string section;
        bool custom_detections = false;
        std::set<std::string> graph_ids;
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            const std::string_view line = trim(raw);
            if (line.empty() || line.front() == '#' || line.front() == ';') continue;

            if (line.front() == '[') {
                if (line.back() != ']') fail("unterminated section header");
                const std::string_view header = trim(line.substr(1, line.size() - 2));
                const auto space = header.find_first_of(" \t");
                section = std::string(header.substr(0, space));
                if (section == "graph") {
                    if (space == std::string_view::npos) fail("graph section needs an id: [graph <id>]");
                    GraphInput g;
                    g.id = std::string(trim(header.substr(space)));
                    if (!graph_ids.insert(g.id).second) fail("duplicate graph id '" + g.id + "'");
                    config.graphs.push_back(std::move(g));
                } else if (section == "detection") {
                    custom_detections = true;
                    config.detections.emplace_back();
                } else if (section != "pipeline" && section != "sampling") {
                    fail("unknown section '" + section + "'");
                }
                continue;
            }

            const auto eq = line.find('=');
            if (eq == std::string_view::npos) fail("expected key = value");
            const std::string key(trim(line.substr(0, eq)));
            const std::string_view value = trim(line.substr(eq + 1));
            if (value.empty()) fail("empty value for '" + key + "'");

            if (section == "pipeline") {
                if (key == "out_dir") config.out_dir = path(value);
                else if (key == "jobs") config.jobs = number<std::size_t>(value);
                else if (key == "inject_truth") config.inject_truth = boolean(value);
                else fail("unknown pipeline key '" + key + "'");
            } else if (section == "sampling") {
                if (key == "samples") config.sampling.sample_count = number<std::size_t>(value);
                else if (key == "epsilon") config.sampling.epsilon = number<double>(value);
                else if (key == "p") config.sampling.confidence_p = number<double>(value);
                else if (key == "seed") config.sampling.rng_seed = number<std::uint64_t>(value);
                else fail("unknown sampling key '" + key + "'");
            } else if (section == "detection") {
                DetectionSpec& spec = config.detections.back();
                if (key == "algorithm") {
                    auto a = parse_algorithm(value);
                    if (!a) fail("unknown algorithm '" + std::string(value) + "'");
                    spec.algorithm = *a;
                } else if (key == "seed") spec.seed = number<std::uint64_t>(value);
                else if (key == "k") spec.k = number<std::size_t>(value);
                else if (key == "max_sweeps") spec.max_sweeps = number<std::size_t>(value);
                else fail("unknown detection key '" + key + "'");
            } else if (section == "graph") {
                GraphInput& g = config.graphs.back();
                if (key == "edges") g.edges = path(value);
                else if (key == "truth") g.truth = path(value);
                else if (key == "import") g.imports.push_back(path(value));
                else fail("unknown graph key '" + key + "'");
            } else {
                fail("key outside of any section");
            }
        }

        if (config.graphs.empty()) fail("no [graph <id>] section");
        for (const auto& g : config.graphs)
            if (g.edges.empty() || g.truth.empty())
                throw ConfigError(std::string(source_) + ": graph '" + g.id + "' needs edges and truth");
        if (!custom_detections) config.detections = default_detections();
        for (const auto& spec : config.detections) {
            try {
                spec.validate();
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string(source_) + ": " + e.what());
            }
        }
        if (config.jobs == 0) throw ConfigError(std::string(source_) + ": jobs must be positive");
        return config;
    }

private:
    std::string_view source_;
    std::filesystem::path base_;
    std::size_t line_ = 0;
};

} // namespace

std::vector<DetectionSpec> default_detections() {
    return {
        {Algorithm::louvain, 1, 3, 100},
        {Algorithm::cnm, 1, 3, 100},
        {Algorithm::label_propagation, 1, 3, 100},
        {Algorithm::k_core, 1, 3, 100},
    };
}

PipelineConfig parse_config(std::istream& in, const std::filesystem::path& base_dir,
                            std::string_view source) {
    return ConfigReader(source, base_dir).read(in);
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path.string());
    return parse_config(in, path.parent_path(), path.string());
}

} // namespace commeval
