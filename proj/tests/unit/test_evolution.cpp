#include <doctest.h>

#include <cmath>
#include <deque>
#include <limits>
#include <random>

#include "mmgan/evolve.hpp"
#include "mmgan/nsga2.hpp"
#include "mmgan/stub_library.hpp"
#include "mmgan/variation.hpp"
#include "support/oracles.hpp"

using namespace mmgan;

namespace {

// Replays a fixed script of draws; falls back to a constant once exhausted.
class ScriptedSource final : public RandomSource {
public:
    std::deque<double> reals;
    std::deque<int> ints;
    double fallback = 0.99;
    double uniform01() override {
        if (reals.empty()) return fallback;
        const double v = reals.front();
        reals.pop_front();
        return v;
    }
    int uniform_int(int lo, int hi) override {
        if (ints.empty()) return lo;
        const int v = ints.front();
        ints.pop_front();
        REQUIRE(v >= lo);
        REQUIRE(v <= hi);
        return v;
    }
};

Genome filled(double v) {
    Genome g;
    g.genes().fill(v);
    return g;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("dominance") {
    CHECK_FALSE(dominates({10, 0.5}, {10, 0.5}));
    CHECK(dominates({12, 0.5}, {10, 0.5}));
    CHECK_FALSE(dominates({12, 0.4}, {10, 0.5}));
    CHECK_FALSE(dominates({10, 0.5}, {12, 0.4}));
}

TEST_CASE("non-dominated sorting") {
    SUBCASE("total order") {
        const auto layers = non_dominated_sort({{1, 1}, {2, 2}, {3, 3}});
        REQUIRE(layers.size() == 3);
        CHECK(layers[0] == std::vector<std::size_t>{2});
        CHECK(layers[1] == std::vector<std::size_t>{1});
        CHECK(layers[2] == std::vector<std::size_t>{0});
    }
    SUBCASE("mutually non-dominated") {
        const auto layers = non_dominated_sort({{3, 1}, {1, 3}, {2, 2}});
        REQUIRE(layers.size() == 1);
        CHECK(layers[0] == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("duplicates share a layer") {
        CHECK(pareto_ranks({{1, 1}, {1, 1}, {0, 0}}) == std::vector<int>{0, 0, 1});
    }
    SUBCASE("random populations against pareto peeling") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 50);
            std::vector<Objectives> objs;
            for (int i = 0; i < n; ++i)
                objs.push_back({static_cast<double>(rng() % 12), static_cast<double>(rng() % 7) / 6.0});
            CHECK(pareto_ranks(objs) == oracle::peel_ranks(objs));
        }
    }
}

TEST_CASE("crowding distance") {
    SUBCASE("pair of boundary points") {
        const auto d = crowding_distance({{0, 1}, {1, 0}}, {0, 1});
        CHECK(d[0] == kInf);
        CHECK(d[1] == kInf);
    }
    SUBCASE("three point front") {
        const auto d = crowding_distance({{0, 10}, {5, 5}, {10, 0}}, {0, 1, 2});
        CHECK(d[0] == kInf);
        CHECK(d[2] == kInf);
        CHECK(std::abs(d[1] - 2.0) <= 1e-12);
    }
    SUBCASE("constant objective is skipped") {
        const auto d = crowding_distance({{0, 3}, {1, 3}, {4, 3}, {10, 3}}, {0, 1, 2, 3});
        CHECK(std::abs(d[1] - 0.4) <= 1e-12);
        CHECK(std::abs(d[2] - 0.9) <= 1e-12);
    }
    SUBCASE("single member") {
        CHECK(crowding_distance({{1, 1}}, {0})[0] == kInf);
    }
}

TEST_CASE("polynomial mutation") {
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0}) CHECK(polynomial_mutation(x, 0.5, 20.0) == doctest::Approx(x).epsilon(1e-15));
    CHECK(polynomial_mutation(1.0, 0.8, 20.0) == 1.0);
    CHECK(polynomial_mutation(-1.0, 0.2, 20.0) == -1.0);
    CHECK(std::abs(polynomial_mutation(0.0, 0.1, 20.0) - oracle::poly_mutation(0.0, 0.1, 20.0)) <= 1e-12);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u01(0.0, 1.0), ux(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = ux(rng), u = u01(rng), eta = 1.0 + 40.0 * u01(rng);
        const double y = polynomial_mutation(x, u, eta);
        CHECK(std::abs(y - oracle::poly_mutation(x, u, eta)) <= 1e-12);
        CHECK(y >= -1.0);
        CHECK(y <= 1.0);
    }
}

TEST_CASE("crossover and offspring") {
    Genome a, b;
    for (std::size_t i = 0; i < kGenomeSize; ++i) {
        a[i] = -0.5;
        b[i] = 0.5;
    }
    SUBCASE("cut at 45") {
        const auto [c1, c2] = single_point_crossover(a, b, 45);
        for (std::size_t i = 0; i < kGenomeSize; ++i) {
            CHECK(c1[i] == (i < 45 ? a[i] : b[i]));
            CHECK(c2[i] == (i < 45 ? b[i] : a[i]));
        }
        CHECK_THROWS_AS(single_point_crossover(a, b, 0), ContractViolation);
        CHECK_THROWS_AS(single_point_crossover(a, b, 90), ContractViolation);
    }
    SUBCASE("no crossover and no mutation returns the parents") {
        ScriptedSource rng;  // every coin 0.99
        OffspringTrace trace;
        const auto [c1, c2] = make_offspring(a, b, rng, {}, &trace);
        CHECK(c1 == a);
        CHECK(c2 == b);
        CHECK_FALSE(trace.crossed);
        CHECK(trace.mutations == 0);
    }
    SUBCASE("scripted crossover at 45 with one mutation") {
        ScriptedSource rng;
        rng.reals = {0.1};  // cross
        rng.ints = {45};
        for (int i = 0; i < 3; ++i) rng.reals.push_back(0.9);  // genes 0..2 of child one stay
        rng.reals.push_back(0.2);                            // gene 3 mutates
        rng.reals.push_back(0.5);                            // with u = 0.5 (no displacement)
        OffspringTrace trace;
        const auto [c1, c2] = make_offspring(a, b, rng, {}, &trace);
        CHECK(trace.crossed);
        CHECK(trace.cut == 45);
        CHECK(trace.mutations == 1);
        CHECK(c1[44] == a[44]);
        CHECK(c1[45] == b[45]);
        CHECK(c2[0] == b[0]);
    }
    SUBCASE("mutation incidence") {
        Mt19937Source rng(8);
        long genes = 0, mutated = 0;
        for (int k = 0; k < 200; ++k) {
            OffspringTrace trace;
            make_offspring(a, b, rng, {}, &trace);
            genes += 2 * kGenomeSize;
            mutated += trace.mutations;
        }
        CHECK(static_cast<double>(mutated) / static_cast<double>(genes) == doctest::Approx(0.30).epsilon(0.02 / 0.30));
    }
}

TEST_CASE("tournament and survivor selection") {
    std::vector<Individual> pop(2);
    pop[0].rank = 0;
    pop[0].crowding = 1.0;
    pop[1].rank = 1;
    pop[1].crowding = kInf;
    ScriptedSource rng;
    rng.ints = {0, 1, 1, 0};
    CHECK(tournament(pop, rng) == 0);
    CHECK(tournament(pop, rng) == 0);
    pop[1].rank = 0;
    rng.ints = {0, 1};
    CHECK(tournament(pop, rng) == 1);  // larger crowding
    pop[1].crowding = 1.0;
    rng.ints = {0, 1};
    rng.reals = {0.7};
    CHECK(tournament(pop, rng) == 1);  // exact tie: coin flip

    std::vector<Individual> merged(6);
    const std::vector<FitnessVector> fit{{10, 0.1}, {5, 0.5}, {1, 0.9}, {4, 0.4}, {1, 0.1}, {0, 0.0}};
    for (std::size_t i = 0; i < merged.size(); ++i) merged[i].fitness = fit[i];
    Mt19937Source r2(1);
    auto keep = select_survivors(merged, 4, r2);
    std::sort(keep.begin(), keep.end());
    CHECK(keep.size() == 4);
    CHECK(keep[0] == 0);
    CHECK(keep[1] == 1);
    CHECK(keep[2] == 2);
    CHECK(keep[3] == 3);
}

TEST_CASE("champion choice") {
    std::vector<Individual> pop(3);
    pop[0].fitness = {20, 0.3};
    pop[1].fitness = {20, 0.6};
    pop[2].fitness = {-1, 0.9};
    CHECK(champion_index(pop) == 1);
}

TEST_CASE("evolution runs") {
    EvolutionConfig cfg;
    cfg.mu = 20;
    cfg.lambda = 20;
    cfg.generations = 10;
    cfg.seed = 42;
    SUBCASE("fixed seed is deterministic, thread count is irrelevant") {
        const auto a = run_evolution(cfg, stub_multi_gan_suite());
        cfg.jobs = 4;
        const auto b = run_evolution(cfg, stub_multi_gan_suite());
        CHECK(a.champion.genome == b.champion.genome);
        CHECK(a.history.size() == 11);
        for (std::size_t g = 0; g < a.history.size(); ++g) CHECK(a.history[g].max_path == b.history[g].max_path);
    }
    SUBCASE("stub multigan finds a beatable level and keeps its champion") {
        cfg.generations = 20;
        const auto r = run_evolution(cfg, stub_multi_gan_suite());
        CHECK(r.champion.fitness.solution_path_length > 0);
        for (std::size_t g = 1; g < r.history.size(); ++g) CHECK(r.history[g].max_path >= r.history[g - 1].max_path);
        CHECK(r.population.size() == 20);
        for (const auto& ind : r.population)
            for (double x : ind.genome.genes()) {
                CHECK(x >= -1.0);
                CHECK(x <= 1.0);
            }
    }
    SUBCASE("failing evaluations score as unbeatable") {
        struct Broken final : SegmentGenerator {
            Segment generate(const LatentVector&) const override { throw std::runtime_error("boom"); }
            std::string describe() const override { return "broken"; }
        };
        std::string warning;
        const auto f = evaluate_genome(Genome(), GeneratorSuite::one_gan(std::make_shared<Broken>()), {}, &warning);
        CHECK(f.solution_path_length == -1);
        CHECK(f.connectivity == 0.0);
        CHECK(warning.find("boom") != std::string::npos);
    }
    SUBCASE("full-scale defaults validate") {
        EvolutionConfig defaults;
        CHECK(defaults.mu == 100);
        CHECK(defaults.lambda == 100);
        CHECK(defaults.generations == 300);
        CHECK_NOTHROW(defaults.validate());
        defaults.variation.mutation_rate = 1.5;
        CHECK_THROWS_AS(defaults.validate(), ConfigError);
    }
}

TEST_CASE("genome json") {
    const Genome g = filled(0.25);
    CHECK(genome_from_json(genome_to_json(g)) == g);
    CHECK_THROWS_AS(genome_from_json(json::array({1, 2})), FormatError);
}
