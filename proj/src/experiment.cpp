#include "mmgan/experiment.hpp"

#include <set>

#include "mmgan/corpus.hpp"
#include "mmgan/stub_library.hpp"

namespace mmgan {

namespace fs = std::filesystem;

void ExperimentConfig::validate() const {
    evolution.validate();
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (backend != Backend::Neural) return;
    if (mode == GanMode::OneGAN) {
        if (onegan_weights.empty()) throw ConfigError("onegan neural config needs 'weights'");
        if (!multigan_weights.empty()) throw ConfigError("onegan neural config takes one weight path, not per-type paths");
        return;
    }
    if (!onegan_weights.empty()) throw ConfigError("multigan neural config takes per-type weight paths, not 'weights'");
    if (multigan_weights.size() != kSegmentTypes.size())
        throw ConfigError("multigan neural config needs 7 weight paths, got " + std::to_string(multigan_weights.size()));
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = [] {
        std::set<std::string> k{"schema_version", "mode",           "backend",       "weights", "mu",
                                "lambda",         "generations",    "crossover_rate", "mutation_rate",
                                "eta",            "seed",           "runs",          "output_dir", "jump_budget",
                                "jobs"};
        for (auto t : kSegmentTypes) k.insert("weights_" + std::string(type_key(t)));
        return k;
    }();
    return keys;
}

template <typename T>
T get_as(const json& doc, const char* key, T fallback) {
    if (!doc.contains(key)) return fallback;
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

fs::path resolve(const fs::path& base, const std::string& p) {
    fs::path path(p);
    return path.is_relative() && !base.empty() ? base / path : path;
}

}  // namespace

ExperimentConfig parse_experiment_config(const json& doc, const fs::path& base_dir) {
    if (!doc.is_object()) throw ConfigError("config must be a flat key-value object");
    for (const auto& [key, value] : doc.items()) {
        if (!known_keys().contains(key)) throw ConfigError("unknown config key '" + key + "'");
        if (value.is_object() || value.is_array()) throw ConfigError("config key '" + key + "' must be a scalar");
    }
    const int version = get_as<int>(doc, "schema_version", -1);
    if (version != kConfigSchemaVersion)
        throw ConfigError("config schema_version must be " + std::to_string(kConfigSchemaVersion));

    ExperimentConfig cfg;
    cfg.mode = mode_from_key(get_as<std::string>(doc, "mode", "multigan"));
    const auto backend = get_as<std::string>(doc, "backend", "stub");
    if (backend == "stub") cfg.backend = Backend::Stub;
    else if (backend == "neural") cfg.backend = Backend::Neural;
    else throw ConfigError("unknown backend '" + backend + "' (expected stub or neural)");

    if (doc.contains("weights")) cfg.onegan_weights = resolve(base_dir, get_as<std::string>(doc, "weights", ""));
    for (auto t : kSegmentTypes) {
        const std::string key = "weights_" + std::string(type_key(t));
        if (doc.contains(key)) cfg.multigan_weights[t] = resolve(base_dir, get_as<std::string>(doc, key.c_str(), ""));
    }

    auto& e = cfg.evolution;
    e.mu = get_as<int>(doc, "mu", e.mu);
    e.lambda = get_as<int>(doc, "lambda", e.lambda);
    e.generations = get_as<int>(doc, "generations", e.generations);
    e.variation.crossover_rate = get_as<double>(doc, "crossover_rate", e.variation.crossover_rate);
    e.variation.mutation_rate = get_as<double>(doc, "mutation_rate", e.variation.mutation_rate);
    e.variation.eta = get_as<double>(doc, "eta", e.variation.eta);
    e.seed = get_as<std::uint64_t>(doc, "seed", e.seed);
    e.movement.jump_budget = get_as<int>(doc, "jump_budget", e.movement.jump_budget);
    e.jobs = get_as<int>(doc, "jobs", e.jobs);
    cfg.runs = get_as<int>(doc, "runs", cfg.runs);
    cfg.output_dir = resolve(base_dir, get_as<std::string>(doc, "output_dir", cfg.output_dir.string()));
    cfg.validate();
    return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& file) {
    json doc;
    try {
        doc = json::parse(read_text_file(file));
    } catch (const json::parse_error& e) {
        throw ConfigError(file.string() + ": " + e.what());
    }
    return parse_experiment_config(doc, file.parent_path());
}

json experiment_config_to_json(const ExperimentConfig& cfg) {
    const auto& e = cfg.evolution;
    json doc = {{"schema_version", kConfigSchemaVersion},
                {"mode", mode_key(cfg.mode)},
                {"backend", cfg.backend == Backend::Stub ? "stub" : "neural"},
                {"mu", e.mu},
                {"lambda", e.lambda},
                {"generations", e.generations},
                {"crossover_rate", e.variation.crossover_rate},
                {"mutation_rate", e.variation.mutation_rate},
                {"eta", e.variation.eta},
                {"seed", e.seed},
                {"jump_budget", e.movement.jump_budget},
                {"jobs", e.jobs},
                {"runs", cfg.runs},
                {"output_dir", cfg.output_dir.string()}};
    if (!cfg.onegan_weights.empty()) doc["weights"] = cfg.onegan_weights.string();
    for (const auto& [t, p] : cfg.multigan_weights) doc["weights_" + std::string(type_key(t))] = p.string();
    return doc;
}

LoadedSuite build_suite(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.backend == Backend::Stub)
        return {cfg.mode == GanMode::OneGAN ? stub_one_gan_suite() : stub_multi_gan_suite(), {}};

    if (cfg.mode == GanMode::OneGAN) {
        auto w = load_weights(cfg.onegan_weights);
        std::vector<std::string> sums{w.checksum};
        return {GeneratorSuite::one_gan(std::make_shared<NeuralGenerator>(std::move(w))), sums};
    }
    std::map<SegmentType, GeneratorPtr> gens;
    std::vector<std::string> sums;
    for (auto t : kSegmentTypes) {
        auto w = load_weights(cfg.multigan_weights.at(t));
        sums.push_back(w.checksum);
        gens[t] = std::make_shared<NeuralGenerator>(std::move(w));
    }
    return {GeneratorSuite::multi_gan(std::move(gens)), sums};
}

}  // namespace mmgan
