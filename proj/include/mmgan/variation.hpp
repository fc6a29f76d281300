#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "mmgan/assembly.hpp"

namespace mmgan {

/// Random draws used by the variation operators. Lets tests script the
/// exact sequence of coin flips and cut points.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    /// Uniform in [0, 1).
    virtual double uniform01() = 0;
    /// Uniform integer in [lo, hi].
    virtual int uniform_int(int lo, int hi) = 0;
};

class Mt19937Source final : public RandomSource {
public:
    explicit Mt19937Source(std::uint64_t seed) : engine_(seed) {}
    double uniform01() override { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    int uniform_int(int lo, int hi) override { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct VariationConfig {
    double crossover_rate = 0.5;
    double mutation_rate = 0.3;  // per gene
    double eta = 20.0;           // polynomial-mutation distribution index
};

/// Bounded polynomial mutation of x in [-1, 1] driven by u in [0, 1).
double polynomial_mutation(double x, double u, double eta);

/// Single-point crossover at `cut` (1..89): children swap tails from `cut` on.
std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, int cut);

struct OffspringTrace {
    bool crossed = false;
    int cut = 0;
    int mutations = 0;
};

/// Crossover with probability `crossover_rate`, then every gene of each
/// child mutates independently with probability `mutation_rate`.
std::pair<Genome, Genome> make_offspring(const Genome& a, const Genome& b, RandomSource& rng,
                                         const VariationConfig& cfg = {}, OffspringTrace* trace = nullptr);

/// Uniform random genome in [-1, 1]^90.
Genome random_genome(RandomSource& rng);

}  // namespace mmgan
