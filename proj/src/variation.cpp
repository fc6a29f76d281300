#include "mmgan/variation.hpp"

#include <algorithm>
#include <cmath>

namespace mmgan {

double polynomial_mutation(double x, double u, double eta) {
    constexpr double lo = -1.0;
    constexpr double hi = 1.0;
    const double span = hi - lo;
    const double d1 = (x - lo) / span;
    const double d2 = (hi - x) / span;
    const double power = 1.0 / (eta + 1.0);
    double dq = 0.0;
    if (u <= 0.5) {
        const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
        dq = std::pow(v, power) - 1.0;
    } else {
        const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
        dq = 1.0 - std::pow(v, power);
    }
    return std::clamp(x + dq * span, lo, hi);
}

std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, int cut) {
    if (cut < 1 || cut >= kGenomeSize) throw ContractViolation("crossover cut must lie in 1..89");
    Genome c1 = a;
    Genome c2 = b;
    for (int i = cut; i < kGenomeSize; ++i) std::swap(c1[i], c2[i]);
    return {c1, c2};
}

std::pair<Genome, Genome> make_offspring(const Genome& a, const Genome& b, RandomSource& rng,
                                         const VariationConfig& cfg, OffspringTrace* trace) {
    OffspringTrace local;
    std::pair<Genome, Genome> kids{a, b};
    if (rng.uniform01() < cfg.crossover_rate) {
        local.crossed = true;
        local.cut = rng.uniform_int(1, kGenomeSize - 1);
        kids = single_point_crossover(a, b, local.cut);
    }
    for (Genome* child : {&kids.first, &kids.second}) {
        for (int i = 0; i < kGenomeSize; ++i) {
            if (rng.uniform01() < cfg.mutation_rate) {
                (*child)[i] = polynomial_mutation((*child)[i], rng.uniform01(), cfg.eta);
                ++local.mutations;
            }
        }
    }
    if (trace) *trace = local;
    return kids;
}

Genome random_genome(RandomSource& rng) {
    Genome g;
    for (int i = 0; i < kGenomeSize; ++i) g[i] = -1.0 + 2.0 * rng.uniform01();
    return g;
}

}  // namespace mmgan
