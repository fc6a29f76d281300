// Command-line entry points: extract, generate, evolve, simulate, analyze,
// render, compare.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "mmgan/analysis.hpp"
#include "mmgan/corpus.hpp"
#include "mmgan/evolve.hpp"
#include "mmgan/experiment.hpp"
#include "mmgan/level_io.hpp"
#include "mmgan/manifest.hpp"
#include "mmgan/simulator.hpp"
#include "mmgan/stub_library.hpp"

namespace fs = std::filesystem;
using namespace mmgan;

namespace {

constexpr const char* kCorpusEnv = "MMGAN_CORPUS";

fs::path corpus_or_env(const std::string& given) {
    if (!given.empty()) return given;
    if (const char* env = std::getenv(kCorpusEnv); env && *env) return env;
    throw ConfigError(std::string("no corpus directory given and ") + kCorpusEnv + " is unset");
}

void print_counts(const TypeCounts& counts) {
    std::cout << "total\t" << counts.total << '\n';
    for (auto t : kSegmentTypes) std::cout << type_key(t) << '\t' << counts[t] << '\n';
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
    std::string corpus;
    std::string out_dir = "datasets";
    std::string mode = "multigan";
    bool nonoverlap = false;
};

int cmd_extract(const ExtractArgs& a) {
    const auto levels = load_corpus(corpus_or_env(a.corpus));
    if (a.nonoverlap) {
        std::vector<Segment> all;
        for (const auto& level : levels) {
            auto segs = partition_non_overlapping(level);
            std::cout << level.id << '\t' << segs.size() << '\n';
            all.insert(all.end(), segs.begin(), segs.end());
        }
        write_dataset(fs::path(a.out_dir) / "nonoverlap.json", all);
        std::cout << "total\t" << all.size() << '\n';
        return 0;
    }
    std::vector<TypedSample> samples;
    for (const auto& level : levels) {
        auto s = extract_segments(level);
        samples.insert(samples.end(), s.begin(), s.end());
    }
    print_counts(export_training_sets(samples, mode_from_key(a.mode), a.out_dir));
    return 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string config;
    std::string mode = "multigan";
    std::string genome_file;
    std::uint64_t seed = 0;
    std::string segment_type;
    std::vector<double> latent;
    std::string out = "level.json";
    std::string vglc_out;
    std::string ppm_out;
};

ExperimentConfig suite_config(const std::string& config_file, const std::string& mode) {
    if (!config_file.empty()) return load_experiment_config(config_file);
    ExperimentConfig cfg;
    cfg.mode = mode_from_key(mode);
    return cfg;
}

int cmd_generate(const GenerateArgs& a) {
    const auto loaded = build_suite(suite_config(a.config, a.mode));
    if (!a.segment_type.empty()) {
        auto t = type_from_key(a.segment_type);
        if (!t) throw ConfigError("unknown segment type '" + a.segment_type + "'");
        const Segment seg = loaded.suite.generate(*t, LatentVector::from_span(a.latent));
        write_text_file(a.out, segment_to_json(seg).dump() + "\n");
        std::cout << "wrote " << a.out << '\n';
        return 0;
    }
    Genome genome;
    if (!a.genome_file.empty()) {
        genome = genome_from_json(json::parse(read_text_file(a.genome_file)));
    } else {
        Mt19937Source rng(a.seed);
        genome = random_genome(rng);
    }
    const Level level = build_level(genome, loaded.suite);
    save_level(a.out, level);
    if (!a.vglc_out.empty()) write_text_file(a.vglc_out, level_to_vglc(level));
    if (!a.ppm_out.empty()) write_text_file(a.ppm_out, render_ppm(level));
    const auto fit = evaluate_level(level);
    std::cout << "segments\t" << level.placements.size() << "\npath_length\t" << fit.solution_path_length
              << "\nconnectivity\t" << std::setprecision(6) << fit.connectivity << "\nwrote " << a.out << '\n';
    return 0;
}

// ---------------------------------------------------------------- evolve

struct EvolveArgs {
    std::string config;
    int jobs = 0;
    bool print_config = false;
    bool quiet = false;
};

int cmd_evolve(const EvolveArgs& a) {
    ExperimentConfig cfg = load_experiment_config(a.config);
    if (a.jobs > 0) cfg.evolution.jobs = a.jobs;
    if (a.print_config) {
        std::cout << experiment_config_to_json(cfg).dump(2) << '\n';
        return 0;
    }
    const auto loaded = build_suite(cfg);  // fails before generation 0 on bad weights

    for (int run = 0; run < cfg.runs; ++run) {
        EvolutionConfig ec = cfg.evolution;
        ec.seed = cfg.evolution.seed + static_cast<std::uint64_t>(run);
        const auto started = std::chrono::steady_clock::now();
        const RunResult result = run_evolution(ec, loaded.suite, [&](const GenerationStats& s) {
            if (!a.quiet)
                std::cerr << "run " << run << " gen " << s.generation << " max_path " << s.max_path
                          << " max_connectivity " << s.max_connectivity << '\n';
        });
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        const fs::path dir = cfg.output_dir / ("run_" + std::to_string(run));
        RunDescription desc{std::string(mode_key(cfg.mode)), cfg.backend == Backend::Stub ? "stub" : "neural",
                            loaded.checksums, run};
        write_text_file(dir / "manifest.json", run_manifest(ec, desc, result).dump(2) + "\n");
        write_text_file(dir / "timing.json", json({{"wall_clock_seconds", seconds}, {"seed", ec.seed}}).dump(2) + "\n");

        const Level champion = build_level(result.champion.genome, loaded.suite);
        save_level(dir / "champion.json", champion);
        write_text_file(dir / "champion.txt", level_to_vglc(champion));
        write_text_file(dir / "champion.ppm", render_ppm(champion, 4, solve(champion, ec.movement).path));
        std::cout << dir.string() << "\tseed " << ec.seed << "\tchampion_path " << result.champion.fitness.solution_path_length
                  << "\tconnectivity " << result.champion.fitness.connectivity << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::string level;
    std::string overlay;
    int jump = 4;
};

int cmd_simulate(const SimulateArgs& a) {
    const Level level = load_level(a.level);
    MovementModel model{a.jump};
    const auto sol = solve(level, model);
    std::cout << "path_length\t" << sol.length << "\nconnectivity\t" << std::setprecision(6)
              << connectivity(level, model) << '\n';
    if (!a.overlay.empty()) write_text_file(a.overlay, render_ppm(level, 4, sol.path));
    return 0;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    std::string corpus;
    std::vector<std::string> level_sets;  // LABEL=DIR
    std::string json_out;
    bool all_copies = false;
};

std::vector<Level> load_level_dir(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") {
            const auto name = e.path().filename().string();
            if (name == "manifest.json" || name == "timing.json") continue;
            files.push_back(e.path());
        }
    std::sort(files.begin(), files.end());
    std::vector<Level> levels;
    for (const auto& f : files) levels.push_back(load_level(f));
    if (levels.empty()) throw IoError("no level documents under " + dir.string());
    return levels;
}

int cmd_analyze(const AnalyzeArgs& a) {
    const RemovalMode mode = a.all_copies ? RemovalMode::AllCopies : RemovalMode::Positional;
    std::vector<NoveltyReport> reports;
    if (!a.corpus.empty() || (a.level_sets.empty() && std::getenv(kCorpusEnv))) {
        std::vector<std::vector<Segment>> levels;
        for (const auto& level : load_corpus(corpus_or_env(a.corpus))) levels.push_back(partition_non_overlapping(level));
        reports.push_back(novelty_report("VGLC", levels, mode));
    }
    for (const auto& entry : a.level_sets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw ConfigError("level set must be LABEL=DIR, got '" + entry + "'");
        const auto levels = load_level_dir(entry.substr(eq + 1));
        std::vector<std::vector<Segment>> segs;
        for (const auto& l : levels) segs.push_back(l.segments());
        auto r = novelty_report(entry.substr(0, eq), segs, mode);
        r.corners = corner_breakdown(levels);
        reports.push_back(std::move(r));
    }
    if (reports.empty()) throw ConfigError("nothing to analyze: give --corpus and/or --levels LABEL=DIR");
    std::cout << report_to_tsv(reports);
    if (!a.json_out.empty()) {
        json doc = json::array();
        for (const auto& r : reports) doc.push_back(report_to_json(r));
        write_text_file(a.json_out, doc.dump(2) + "\n");
    }
    return 0;
}

// ---------------------------------------------------------------- render / compare

struct RenderArgs {
    std::string level;
    std::string out = "level.ppm";
    int scale = 4;
    bool with_path = false;
};

int cmd_render(const RenderArgs& a) {
    const Level level = load_level(a.level);
    std::vector<AvatarState> path;
    if (a.with_path) path = solve(level).path;
    write_text_file(a.out, render_ppm(level, a.scale, path));
    std::cout << "wrote " << a.out << '\n';
    return 0;
}

struct CompareArgs {
    std::string dir_a;
    std::string dir_b;
    std::string json_out;
};

int cmd_compare(const CompareArgs& a) {
    const auto c = compare_runs(collect_manifests(a.dir_a), collect_manifests(a.dir_b));
    for (const auto& w : c.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << comparison_to_tsv(c);
    if (!a.json_out.empty()) write_text_file(a.json_out, comparison_to_json(c).dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mega Man segment-level generation toolkit"};
    app.require_subcommand(1);

    ExtractArgs ex;
    auto* extract = app.add_subcommand("extract", "Slice corpus levels into typed training sets");
    extract->add_option("corpus", ex.corpus, "Corpus directory (defaults to $MMGAN_CORPUS)");
    extract->add_option("-o,--out", ex.out_dir, "Output directory");
    extract->add_option("--mode", ex.mode, "onegan or multigan")->check(CLI::IsMember({"onegan", "multigan"}));
    extract->add_flag("--nonoverlap", ex.nonoverlap, "Emit screen-aligned non-overlapping segments instead");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a level (or one segment) from a genome");
    generate->add_option("--config", gen.config, "Experiment config providing the generator suite");
    generate->add_option("--mode", gen.mode, "Stub suite mode when no config is given");
    generate->add_option("--genome", gen.genome_file, "JSON list of 90 genes");
    generate->add_option("--seed", gen.seed, "Seed for a random genome");
    generate->add_option("--segment", gen.segment_type, "Generate a single segment of this type");
    generate->add_option("--latent", gen.latent, "Five latent values for --segment")->expected(5);
    generate->add_option("-o,--out", gen.out, "Output document");
    generate->add_option("--vglc", gen.vglc_out, "Also write a character grid");
    generate->add_option("--ppm", gen.ppm_out, "Also write a PPM rendering");

    EvolveArgs ev;
    auto* evolve = app.add_subcommand("evolve", "Run NSGA-II level evolution");
    evolve->add_option("config", ev.config, "Experiment config file")->required();
    evolve->add_option("--jobs", ev.jobs, "Evaluation threads");
    evolve->add_flag("--print-config", ev.print_config, "Print the resolved config and exit");
    evolve->add_flag("-q,--quiet", ev.quiet, "No per-generation progress");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Path length and connectivity of a level");
    simulate->add_option("level", sim.level, "Level document")->required();
    simulate->add_option("--overlay", sim.overlay, "Write a PPM with the solution path");
    simulate->add_option("--jump", sim.jump, "Jump ascent budget");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Novelty and distinct-segment tables");
    analyze->add_option("--corpus", an.corpus, "Corpus directory (defaults to $MMGAN_CORPUS)");
    analyze->add_option("--levels", an.level_sets, "LABEL=DIR of level documents (repeatable)");
    analyze->add_option("--json", an.json_out, "Also write a JSON report");
    analyze->add_flag("--all-copies", an.all_copies, "Remove every copy of x in level novelty");

    RenderArgs rn;
    auto* render = app.add_subcommand("render", "Render a level document to PPM");
    render->add_option("level", rn.level, "Level document")->required();
    render->add_option("out", rn.out, "Output PPM");
    render->add_option("--scale", rn.scale, "Pixels per tile");
    render->add_flag("--path", rn.with_path, "Overlay the solution path");

    CompareArgs cmp;
    auto* compare = app.add_subcommand("compare", "Compare champion path lengths of two run directories");
    compare->add_option("a", cmp.dir_a, "First run directory")->required();
    compare->add_option("b", cmp.dir_b, "Second run directory")->required();
    compare->add_option("--json", cmp.json_out, "Also write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*extract) return cmd_extract(ex);
        if (*generate) return cmd_generate(gen);
        if (*evolve) return cmd_evolve(ev);
        if (*simulate) return cmd_simulate(sim);
        if (*analyze) return cmd_analyze(an);
        if (*render) return cmd_render(rn);
        if (*compare) return cmd_compare(cmp);
    } catch (const Error& e) {
        std::cerr << "error: " << e.category() << ": " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: format: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
