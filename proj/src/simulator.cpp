#include "mmgan/simulator.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <queue>

namespace mmgan {

namespace {

bool enterable(const Grid& g, int r, int c) { return is_traversable(passability_at(g, r, c)); }

/// Dense index of a state; modes Grounded/Falling/Climbing take slots 0-2,
/// Rising(b) takes slot 3 + b.
class StateIndex {
public:
    StateIndex(const Grid& g, const MovementModel& m)
        : cols_(g.cols()), per_cell_(3 + std::max(m.jump_budget, 1)),
          size_(static_cast<std::size_t>(g.rows()) * g.cols() * per_cell_) {}

    std::size_t size() const { return size_; }

    std::size_t operator()(const AvatarState& s) const {
        const std::size_t cell = static_cast<std::size_t>(s.pos.row) * cols_ + s.pos.col;
        const int slot = s.mode == MoveMode::Rising ? 3 + s.budget : static_cast<int>(s.mode);
        return cell * per_cell_ + slot;
    }

private:
    int cols_;
    int per_cell_;
    std::size_t size_;
};

int chebyshev(TilePos a, TilePos b) { return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col)); }

}  // namespace

MoveMode settle(const Grid& grid, TilePos pos) {
    if (passability_at(grid, pos.row, pos.col) == Passability::Climb) return MoveMode::Climbing;
    const auto below = passability_at(grid, pos.row + 1, pos.col);
    if (below == Passability::Solid || below == Passability::Climb) return MoveMode::Grounded;
    return MoveMode::Falling;
}

AvatarState start_state(const Grid& grid, TilePos spawn) { return {spawn, settle(grid, spawn), 0}; }

std::vector<AvatarState> successors(const Grid& grid, const AvatarState& s, const MovementModel& model) {
    std::vector<AvatarState> out;
    const int r = s.pos.row;
    const int c = s.pos.col;
    auto arrive = [&](int nr, int nc) {
        if (enterable(grid, nr, nc)) out.push_back({{nr, nc}, settle(grid, {nr, nc}), 0});
    };
    auto rise = [&](int budget) {
        for (int dc = -1; dc <= 1; ++dc)
            if (enterable(grid, r - 1, c + dc)) out.push_back({{r - 1, c + dc}, MoveMode::Rising, budget});
    };

    switch (s.mode) {
        case MoveMode::Grounded:
            arrive(r, c - 1);
            arrive(r, c + 1);
            if (model.jump_budget > 0) rise(model.jump_budget - 1);
            if (passability_at(grid, r + 1, c) == Passability::Climb)
                out.push_back({{r + 1, c}, MoveMode::Climbing, 0});
            break;
        case MoveMode::Rising: {
            if (s.budget > 0) rise(s.budget - 1);
            MoveMode released = settle(grid, s.pos);
            out.push_back({s.pos, released, 0});
            break;
        }
        case MoveMode::Falling:
            for (int dc = -1; dc <= 1; ++dc) arrive(r + 1, c + dc);
            break;
        case MoveMode::Climbing:
            arrive(r - 1, c);
            arrive(r + 1, c);
            arrive(r, c - 1);
            arrive(r, c + 1);
            break;
    }
    return out;
}

SolveResult solve(const Grid& grid, TilePos spawn, TilePos orb, const MovementModel& model) {
    SolveResult result;
    if (!enterable(grid, spawn.row, spawn.col) || !enterable(grid, orb.row, orb.col)) return result;

    const StateIndex index(grid, model);
    constexpr int kUnseen = -1;
    std::vector<int> g_cost(index.size(), kUnseen);
    std::vector<std::size_t> parent(index.size());
    std::vector<AvatarState> state_of(index.size());
    std::vector<bool> closed(index.size(), false);

    struct Entry {
        int f;
        int g;
        std::size_t id;
    };
    // Lowest f first; among equal f prefer deeper nodes; then lower id for determinism.
    auto worse = [](const Entry& a, const Entry& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.g != b.g) return a.g < b.g;
        return a.id > b.id;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> open(worse);

    const AvatarState start = start_state(grid, spawn);
    const auto start_id = index(start);
    g_cost[start_id] = 0;
    parent[start_id] = start_id;
    state_of[start_id] = start;
    open.push({chebyshev(spawn, orb), 0, start_id});

    while (!open.empty()) {
        const Entry e = open.top();
        open.pop();
        if (closed[e.id]) continue;
        closed[e.id] = true;
        const AvatarState cur = state_of[e.id];
        if (cur.pos == orb) {
            result.length = e.g;
            for (std::size_t id = e.id;; id = parent[id]) {
                result.path.push_back(state_of[id]);
                if (id == start_id) break;
            }
            std::reverse(result.path.begin(), result.path.end());
            return result;
        }
        for (const auto& next : successors(grid, cur, model)) {
            const auto id = index(next);
            const int g = e.g + 1;
            if (closed[id] || (g_cost[id] != kUnseen && g_cost[id] <= g)) continue;
            g_cost[id] = g;
            parent[id] = e.id;
            state_of[id] = next;
            open.push({g + chebyshev(next.pos, orb), g, id});
        }
    }
    return result;
}

SolveResult solve(const Level& level, const MovementModel& model) {
    if (level.degenerate()) return {};
    return solve(level.fused, *level.spawn, *level.orb, model);
}

std::vector<bool> reachable_positions(const Grid& grid, TilePos spawn, const MovementModel& model) {
    std::vector<bool> seen_pos(static_cast<std::size_t>(grid.rows()) * grid.cols(), false);
    if (!enterable(grid, spawn.row, spawn.col)) return seen_pos;
    const StateIndex index(grid, model);
    std::vector<bool> seen(index.size(), false);
    std::deque<AvatarState> queue;
    const AvatarState start = start_state(grid, spawn);
    seen[index(start)] = true;
    queue.push_back(start);
    while (!queue.empty()) {
        const AvatarState cur = queue.front();
        queue.pop_front();
        seen_pos[static_cast<std::size_t>(cur.pos.row) * grid.cols() + cur.pos.col] = true;
        for (const auto& next : successors(grid, cur, model)) {
            const auto id = index(next);
            if (seen[id]) continue;
            seen[id] = true;
            queue.push_back(next);
        }
    }
    return seen_pos;
}

double connectivity(const Grid& grid, TilePos spawn, const MovementModel& model) {
    std::size_t traversable = 0;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (is_traversable(passability(grid.at(r, c)))) ++traversable;
    if (traversable == 0) return 0.0;
    const auto reached = reachable_positions(grid, spawn, model);
    std::size_t hit = 0;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (reached[static_cast<std::size_t>(r) * grid.cols() + c] && is_traversable(passability(grid.at(r, c))))
                ++hit;
    return static_cast<double>(hit) / static_cast<double>(traversable);
}

double connectivity(const Level& level, const MovementModel& model) {
    if (!level.spawn) return 0.0;
    return connectivity(level.fused, *level.spawn, model);
}

FitnessVector evaluate_level(const Level& level, const MovementModel& model) {
    return {solve(level, model).length, connectivity(level, model)};
}

}  // namespace mmgan
