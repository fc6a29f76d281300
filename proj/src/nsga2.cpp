#include "mmgan/nsga2.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mmgan {

bool dominates(const Objectives& a, const Objectives& b) noexcept {
    bool strictly = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) return false;
        if (a[k] > b[k]) strictly = true;
    }
    return strictly;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(const std::vector<Objectives>& objs) {
    const std::size_t n = objs.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);  // i dominates each of dominated_by[i]
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> layers;
    std::vector<std::size_t> current;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(objs[i], objs[j])) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(objs[j], objs[i])) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current)
            for (auto j : dominated_by[i])
                if (--domination_count[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(current));
        current = std::move(next);
    }
    return layers;
}

std::vector<int> pareto_ranks(const std::vector<Objectives>& objs) {
    std::vector<int> rank(objs.size(), -1);
    const auto layers = non_dominated_sort(objs);
    for (std::size_t k = 0; k < layers.size(); ++k)
        for (auto i : layers[k]) rank[i] = static_cast<int>(k);
    return rank;
}

std::vector<double> crowding_distance(const std::vector<Objectives>& objs, const std::vector<std::size_t>& layer) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const std::size_t n = layer.size();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < Objectives{}.size(); ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return objs[layer[a]][k] < objs[layer[b]][k]; });
        const double lo = objs[layer[order.front()]][k];
        const double hi = objs[layer[order.back()]][k];
        if (hi == lo) continue;
        dist[order.front()] = kInf;
        dist[order.back()] = kInf;
        for (std::size_t p = 1; p + 1 < n; ++p) {
            if (dist[order[p]] == kInf) continue;
            dist[order[p]] += (objs[layer[order[p + 1]]][k] - objs[layer[order[p - 1]]][k]) / (hi - lo);
        }
    }
    return dist;
}

}  // namespace mmgan
