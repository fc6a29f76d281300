#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mmgan/assembly.hpp"
#include "mmgan/json_io.hpp"
#include "mmgan/nsga2.hpp"
#include "mmgan/simulator.hpp"
#include "mmgan/variation.hpp"

namespace mmgan {

struct Individual {
    Genome genome;
    FitnessVector fitness;
    int rank = 0;
    double crowding = 0.0;

    Objectives objectives() const {
        return {static_cast<double>(fitness.solution_path_length), fitness.connectivity};
    }
};

struct EvolutionConfig {
    int mu = 100;
    int lambda = 100;
    int generations = 300;
    VariationConfig variation;
    std::uint64_t seed = 0;
    MovementModel movement;
    int jobs = 1;  // evaluation threads; does not affect results

    /// Throws ConfigError on out-of-range values.
    void validate() const;
};

struct GenerationStats {
    int generation = 0;
    int max_path = -1;
    double max_connectivity = 0.0;
    double mean_path = 0.0;
};

struct RunResult {
    std::vector<GenerationStats> history;  // generation 0 = initial population
    std::vector<Individual> population;    // final survivors
    Individual champion;                   // longest path, then best connectivity
    std::vector<std::string> warnings;
};

/// Evaluates one genome; exceptions inside level building or simulation
/// yield (-1, 0) and a warning.
FitnessVector evaluate_genome(const Genome& genome, const GeneratorSuite& suite, const MovementModel& model,
                              std::string* warning = nullptr);

/// Assigns rank and crowding distance in place.
void assign_rank_and_crowding(std::vector<Individual>& pop);

/// Binary tournament on (rank asc, crowding desc); exact ties go to a coin flip.
std::size_t tournament(const std::vector<Individual>& pop, RandomSource& rng);

/// Elitist truncation of a merged population to `mu` members. The last
/// layer that does not fit is cut by crowding distance with ties broken by
/// random keys drawn from `rng`. Returns the chosen indices.
std::vector<std::size_t> select_survivors(std::vector<Individual>& merged, std::size_t mu, RandomSource& rng);

/// Index of the champion: longest path, then highest connectivity, then
/// lowest index.
std::size_t champion_index(const std::vector<Individual>& pop);

using GenerationCallback = std::function<void(const GenerationStats&)>;

RunResult run_evolution(const EvolutionConfig& config, const GeneratorSuite& suite,
                        const GenerationCallback& on_generation = {});

json genome_to_json(const Genome& g);
Genome genome_from_json(const json& j);

}  // namespace mmgan
