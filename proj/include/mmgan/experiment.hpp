#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "mmgan/evolve.hpp"
#include "mmgan/generator.hpp"

namespace mmgan {

inline constexpr int kConfigSchemaVersion = 1;

enum class Backend { Stub, Neural };

/// Flat experiment configuration. Defaults are the full-scale settings:
/// mu = lambda = 100, 300 generations, crossover 0.5, per-gene mutation 0.3.
struct ExperimentConfig {
    GanMode mode = GanMode::MultiGAN;
    Backend backend = Backend::Stub;
    std::filesystem::path onegan_weights;
    std::map<SegmentType, std::filesystem::path> multigan_weights;
    EvolutionConfig evolution;
    std::filesystem::path output_dir = "runs";
    int runs = 1;

    /// Throws ConfigError when the mode/backend/weights combination or any
    /// evolution parameter is invalid.
    void validate() const;
};

/// Parses the flat JSON document. Relative weight and output paths resolve
/// against `base_dir`. Unknown keys are rejected.
ExperimentConfig parse_experiment_config(const json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& file);

/// Echo of every setting (used in run manifests and `evolve --print-config`).
json experiment_config_to_json(const ExperimentConfig& cfg);

struct LoadedSuite {
    GeneratorSuite suite;
    std::vector<std::string> checksums;
};

/// Loads weights (or builds stubs). Any bad weight file fails here, before
/// evolution starts.
LoadedSuite build_suite(const ExperimentConfig& cfg);

}  // namespace mmgan
