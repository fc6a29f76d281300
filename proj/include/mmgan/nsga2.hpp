#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace mmgan {

/// Objective vector; every component is maximized.
using Objectives = std::array<double, 2>;

/// a dominates b: no worse in every objective and strictly better in one.
bool dominates(const Objectives& a, const Objectives& b) noexcept;

/// Fast non-dominated sort. Returns the Pareto layers as index lists into
/// `objs`, best layer first; each layer is in ascending index order.
std::vector<std::vector<std::size_t>> non_dominated_sort(const std::vector<Objectives>& objs);

/// rank[i] = layer index of objs[i].
std::vector<int> pareto_ranks(const std::vector<Objectives>& objs);

/// Crowding distance of each member of `layer` (same order). Boundary
/// members get +infinity; objectives that are constant across the layer
/// contribute nothing.
std::vector<double> crowding_distance(const std::vector<Objectives>& objs, const std::vector<std::size_t>& layer);

}  // namespace mmgan
