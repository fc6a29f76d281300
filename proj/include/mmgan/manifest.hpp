#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mmgan/evolve.hpp"
#include "mmgan/json_io.hpp"

namespace mmgan {

inline constexpr const char* kRunFormatTag = "mmgan-run";

struct RunDescription {
    std::string mode;     // onegan / multigan
    std::string backend;  // stub / neural
    std::vector<std::string> weight_checksums;
    int run_index = 0;
};

/// Run manifest: config echo, per-generation champion table, champion and
/// final population. Holds no timing so identical runs give identical bytes.
json run_manifest(const EvolutionConfig& config, const RunDescription& desc, const RunResult& result);

struct ManifestSummary {
    std::filesystem::path file;
    std::vector<int> champion_path;  // per generation
    int final_champion_path = -1;
};

ManifestSummary read_manifest_summary(const std::filesystem::path& file);

/// Every manifest under `dir` (recursively), sorted by path. Throws IoError
/// when none is found.
std::vector<ManifestSummary> collect_manifests(const std::filesystem::path& dir);

struct MannWhitneyResult {
    double u = 0.0;        // U statistic of the first sample
    double p_value = 1.0;  // two-sided
    bool exact = false;
};

/// Two-sided Mann-Whitney U test with mid-ranks for ties. Small samples
/// (combined size <= 20) use the exact permutation distribution of the
/// rank sum; larger ones a tie-corrected normal approximation.
MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b);

struct Comparison {
    std::vector<double> mean_a;      // per generation
    std::vector<double> mean_b;
    std::vector<double> difference;  // a - b
    std::vector<double> final_a;
    std::vector<double> final_b;
    MannWhitneyResult test;
    std::vector<std::string> warnings;
};

/// Per-generation mean champion path per side, truncated to the shortest run.
Comparison compare_runs(const std::vector<ManifestSummary>& a, const std::vector<ManifestSummary>& b);

json comparison_to_json(const Comparison& c);
std::string comparison_to_tsv(const Comparison& c);

}  // namespace mmgan
