#include "mmgan/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "mmgan/corpus.hpp"

namespace mmgan {

namespace fs = std::filesystem;

namespace {

json individual_to_json(const Individual& ind) {
    return {{"genome", genome_to_json(ind.genome)},
            {"path_length", ind.fitness.solution_path_length},
            {"connectivity", ind.fitness.connectivity},
            {"rank", ind.rank},
            {"crowding", std::isinf(ind.crowding) ? json("inf") : json(ind.crowding)}};
}

}  // namespace

json run_manifest(const EvolutionConfig& config, const RunDescription& desc, const RunResult& result) {
    json doc;
    doc["format"] = kRunFormatTag;
    doc["version"] = 1;
    doc["config"] = {{"mode", desc.mode},
                     {"backend", desc.backend},
                     {"weight_checksums", desc.weight_checksums},
                     {"mu", config.mu},
                     {"lambda", config.lambda},
                     {"generations", config.generations},
                     {"crossover_rate", config.variation.crossover_rate},
                     {"mutation_rate", config.variation.mutation_rate},
                     {"eta", config.variation.eta},
                     {"jump_budget", config.movement.jump_budget}};
    doc["seed"] = config.seed;
    doc["run_index"] = desc.run_index;

    json table = json::array();
    for (const auto& g : result.history)
        table.push_back({{"generation", g.generation},
                         {"max_path", g.max_path},
                         {"max_connectivity", g.max_connectivity},
                         {"mean_path", g.mean_path}});
    doc["generations"] = std::move(table);
    doc["champion"] = individual_to_json(result.champion);
    json pop = json::array();
    for (const auto& ind : result.population) pop.push_back(individual_to_json(ind));
    doc["final_population"] = std::move(pop);
    doc["warnings"] = result.warnings;
    return doc;
}

ManifestSummary read_manifest_summary(const fs::path& file) {
    ManifestSummary s;
    s.file = file;
    try {
        const json doc = json::parse(read_text_file(file));
        if (doc.value("format", "") != kRunFormatTag) throw FormatError(file.string() + ": not a run manifest");
        for (const auto& g : doc.at("generations")) s.champion_path.push_back(g.at("max_path").get<int>());
        s.final_champion_path = doc.at("champion").at("path_length").get<int>();
    } catch (const json::exception& e) {
        throw FormatError(file.string() + ": " + e.what());
    }
    return s;
}

std::vector<ManifestSummary> collect_manifests(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().filename() == "manifest.json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no manifest.json found under " + dir.string());
    std::vector<ManifestSummary> out;
    for (const auto& f : files) out.push_back(read_manifest_summary(f));
    return out;
}

namespace {

std::vector<double> mid_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

MannWhitneyResult mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
    MannWhitneyResult res;
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    if (n1 == 0 || n2 == 0) return res;
    std::vector<double> all(a);
    all.insert(all.end(), b.begin(), b.end());
    const auto ranks = mid_ranks(all);
    const double r1 = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(n1), 0.0);
    res.u = r1 - static_cast<double>(n1 * (n1 + 1)) / 2.0;
    const double mean_r1 = static_cast<double>(n1) * static_cast<double>(n1 + n2 + 1) / 2.0;
    const double observed = std::abs(r1 - mean_r1);
    constexpr double kEps = 1e-9;

    if (n1 + n2 <= 20) {
        // Enumerate every way of choosing n1 ranks out of the pooled ranks.
        std::size_t extreme = 0;
        std::size_t total = 0;
        std::vector<int> pick(n1);
        std::iota(pick.begin(), pick.end(), 0);
        const int n = static_cast<int>(n1 + n2);
        while (true) {
            double sum = 0.0;
            for (int i : pick) sum += ranks[static_cast<std::size_t>(i)];
            ++total;
            if (std::abs(sum - mean_r1) >= observed - kEps) ++extreme;
            int k = static_cast<int>(n1) - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - static_cast<int>(n1) + k) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (std::size_t m = static_cast<std::size_t>(k) + 1; m < n1; ++m) pick[m] = pick[m - 1] + 1;
        }
        res.p_value = static_cast<double>(extreme) / static_cast<double>(total);
        res.exact = true;
        return res;
    }

    // Tie-corrected variance of U.
    std::vector<double> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double n = static_cast<double>(n1 + n2);
    const double var = static_cast<double>(n1 * n2) / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) return res;
    const double z = observed / std::sqrt(var);
    res.p_value = std::erfc(z / std::sqrt(2.0));
    return res;
}

Comparison compare_runs(const std::vector<ManifestSummary>& a, const std::vector<ManifestSummary>& b) {
    if (a.empty() || b.empty()) throw ContractViolation("comparison needs at least one manifest per side");
    Comparison c;
    std::size_t gens = a.front().champion_path.size();
    for (const auto* side : {&a, &b})
        for (const auto& m : *side) gens = std::min(gens, m.champion_path.size());
    for (const auto* side : {&a, &b})
        for (const auto& m : *side)
            if (m.champion_path.size() != gens)
                c.warnings.push_back(m.file.string() + ": " + std::to_string(m.champion_path.size()) +
                                     " generations, truncated to " + std::to_string(gens));

    auto means = [gens](const std::vector<ManifestSummary>& side) {
        std::vector<double> out(gens, 0.0);
        for (const auto& m : side)
            for (std::size_t g = 0; g < gens; ++g) out[g] += m.champion_path[g];
        for (auto& v : out) v /= static_cast<double>(side.size());
        return out;
    };
    c.mean_a = means(a);
    c.mean_b = means(b);
    c.difference.resize(gens);
    for (std::size_t g = 0; g < gens; ++g) c.difference[g] = c.mean_a[g] - c.mean_b[g];
    for (const auto& m : a) c.final_a.push_back(gens ? m.champion_path[gens - 1] : m.final_champion_path);
    for (const auto& m : b) c.final_b.push_back(gens ? m.champion_path[gens - 1] : m.final_champion_path);
    c.test = mann_whitney_u(c.final_a, c.final_b);
    return c;
}

json comparison_to_json(const Comparison& c) {
    json doc;
    doc["format"] = "mmgan-comparison";
    doc["version"] = 1;
    doc["mean_champion_path_a"] = c.mean_a;
    doc["mean_champion_path_b"] = c.mean_b;
    doc["difference"] = c.difference;
    doc["final_a"] = c.final_a;
    doc["final_b"] = c.final_b;
    doc["mann_whitney"] = {{"u", c.test.u}, {"p_value", c.test.p_value}, {"exact", c.test.exact}};
    doc["warnings"] = c.warnings;
    return doc;
}

std::string comparison_to_tsv(const Comparison& c) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "generation\tmean_a\tmean_b\tdifference\n";
    for (std::size_t g = 0; g < c.difference.size(); ++g)
        out << g << '\t' << c.mean_a[g] << '\t' << c.mean_b[g] << '\t' << c.difference[g] << '\n';
    out << "# mann-whitney U=" << c.test.u << " p=" << std::setprecision(5) << c.test.p_value
        << (c.test.exact ? " (exact)" : " (normal approx)") << '\n';
    return out.str();
}

}  // namespace mmgan
