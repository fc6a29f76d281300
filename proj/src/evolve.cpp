#include "mmgan/evolve.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace mmgan {

void EvolutionConfig::validate() const {
    if (mu < 2) throw ConfigError("mu must be at least 2");
    if (lambda < 2) throw ConfigError("lambda must be at least 2");
    if (generations < 0) throw ConfigError("generations must be non-negative");
    auto rate = [](double v, const char* name) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(std::string(name) + " must lie in [0, 1]");
    };
    rate(variation.crossover_rate, "crossover_rate");
    rate(variation.mutation_rate, "mutation_rate");
    if (!(variation.eta >= 0.0)) throw ConfigError("eta must be non-negative");
    if (movement.jump_budget < 0) throw ConfigError("jump_budget must be non-negative");
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
}

FitnessVector evaluate_genome(const Genome& genome, const GeneratorSuite& suite, const MovementModel& model,
                              std::string* warning) {
    try {
        return evaluate_level(build_level(genome, suite), model);
    } catch (const std::exception& e) {
        if (warning) *warning = e.what();
        return {-1, 0.0};
    }
}

void assign_rank_and_crowding(std::vector<Individual>& pop) {
    std::vector<Objectives> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.objectives());
    const auto layers = non_dominated_sort(objs);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const auto dist = crowding_distance(objs, layers[k]);
        for (std::size_t p = 0; p < layers[k].size(); ++p) {
            pop[layers[k][p]].rank = static_cast<int>(k);
            pop[layers[k][p]].crowding = dist[p];
        }
    }
}

std::size_t tournament(const std::vector<Individual>& pop, RandomSource& rng) {
    const int n = static_cast<int>(pop.size());
    const auto a = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    const auto b = static_cast<std::size_t>(rng.uniform_int(0, n - 1));
    const auto& x = pop[a];
    const auto& y = pop[b];
    if (x.rank != y.rank) return x.rank < y.rank ? a : b;
    if (x.crowding != y.crowding) return x.crowding > y.crowding ? a : b;
    return rng.uniform01() < 0.5 ? a : b;
}

std::vector<std::size_t> select_survivors(std::vector<Individual>& merged, std::size_t mu, RandomSource& rng) {
    std::vector<Objectives> objs;
    objs.reserve(merged.size());
    for (const auto& ind : merged) objs.push_back(ind.objectives());
    const auto layers = non_dominated_sort(objs);

    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < layers.size() && chosen.size() < mu; ++k) {
        const auto& layer = layers[k];
        const auto dist = crowding_distance(objs, layer);
        for (std::size_t p = 0; p < layer.size(); ++p) {
            merged[layer[p]].rank = static_cast<int>(k);
            merged[layer[p]].crowding = dist[p];
        }
        if (chosen.size() + layer.size() <= mu) {
            chosen.insert(chosen.end(), layer.begin(), layer.end());
            continue;
        }
        std::vector<double> tie_key(layer.size());
        for (auto& t : tie_key) t = rng.uniform01();
        std::vector<std::size_t> order(layer.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (dist[a] != dist[b]) return dist[a] > dist[b];
            if (tie_key[a] != tie_key[b]) return tie_key[a] < tie_key[b];
            return a < b;
        });
        for (std::size_t p = 0; chosen.size() < mu; ++p) chosen.push_back(layer[order[p]]);
    }
    return chosen;
}

std::size_t champion_index(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        const auto& a = pop[i].fitness;
        const auto& b = pop[best].fitness;
        if (a.solution_path_length > b.solution_path_length ||
            (a.solution_path_length == b.solution_path_length && a.connectivity > b.connectivity))
            best = i;
    }
    return best;
}

namespace {

void evaluate_all(std::vector<Individual>& pop, std::size_t from, const GeneratorSuite& suite,
                  const MovementModel& model, int jobs, std::vector<std::string>& warnings) {
    const std::size_t n = pop.size() - from;
    std::vector<std::string> messages(n);
    auto work = [&](std::size_t i) {
        pop[from + i].fitness = evaluate_genome(pop[from + i].genome, suite, model, &messages[i]);
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) work(i);
            });
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!messages[i].empty()) warnings.push_back("individual " + std::to_string(from + i) + ": " + messages[i]);
}

GenerationStats summarize(const std::vector<Individual>& pop, int generation) {
    GenerationStats s;
    s.generation = generation;
    double total = 0.0;
    for (const auto& ind : pop) {
        s.max_path = std::max(s.max_path, ind.fitness.solution_path_length);
        s.max_connectivity = std::max(s.max_connectivity, ind.fitness.connectivity);
        total += ind.fitness.solution_path_length;
    }
    s.mean_path = pop.empty() ? 0.0 : total / static_cast<double>(pop.size());
    return s;
}

}  // namespace

RunResult run_evolution(const EvolutionConfig& config, const GeneratorSuite& suite,
                        const GenerationCallback& on_generation) {
    config.validate();
    Mt19937Source rng(config.seed);
    RunResult result;

    std::vector<Individual> pop(static_cast<std::size_t>(config.mu));
    for (auto& ind : pop) ind.genome = random_genome(rng);
    evaluate_all(pop, 0, suite, config.movement, config.jobs, result.warnings);
    assign_rank_and_crowding(pop);

    auto record = [&](int gen) {
        result.history.push_back(summarize(pop, gen));
        if (on_generation) on_generation(result.history.back());
    };
    record(0);

    for (int gen = 1; gen <= config.generations; ++gen) {
        std::vector<Individual> merged = pop;
        merged.reserve(pop.size() + static_cast<std::size_t>(config.lambda));
        const std::size_t offspring_start = merged.size();
        while (merged.size() - offspring_start < static_cast<std::size_t>(config.lambda)) {
            const auto& p1 = pop[tournament(pop, rng)].genome;
            const auto& p2 = pop[tournament(pop, rng)].genome;
            auto kids = make_offspring(p1, p2, rng, config.variation);
            merged.push_back({kids.first, {}, 0, 0.0});
            if (merged.size() - offspring_start < static_cast<std::size_t>(config.lambda))
                merged.push_back({kids.second, {}, 0, 0.0});
        }
        evaluate_all(merged, offspring_start, suite, config.movement, config.jobs, result.warnings);

        const auto keep = select_survivors(merged, static_cast<std::size_t>(config.mu), rng);
        std::vector<Individual> next;
        next.reserve(keep.size());
        for (auto i : keep) next.push_back(merged[i]);
        pop = std::move(next);
        record(gen);
    }

    result.population = pop;
    result.champion = pop[champion_index(pop)];
    return result;
}

json genome_to_json(const Genome& g) {
    json arr = json::array();
    for (double v : g.genes()) arr.push_back(v);
    return arr;
}

Genome genome_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("genome must be a list of numbers");
    std::vector<double> v;
    for (const auto& x : j) {
        if (!x.is_number()) throw FormatError("genome entries must be numbers");
        v.push_back(x.get<double>());
    }
    if (v.size() != kGenomeSize) throw FormatError("genome needs 90 genes, got " + std::to_string(v.size()));
    for (double x : v)
        if (!(x >= -1.0 && x <= 1.0)) throw FormatError("genome entry outside [-1, 1]");
    return Genome::from_span(v);
}

}  // namespace mmgan
