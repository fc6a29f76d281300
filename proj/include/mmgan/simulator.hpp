#pragma once

#include <cstdint>
#include <vector>

#include "mmgan/assembly.hpp"
#include "mmgan/passability.hpp"

namespace mmgan {

enum class MoveMode : std::uint8_t { Grounded, Falling, Climbing, Rising };

/// One-tile avatar. `budget` counts the upward steps left in a jump and is
/// only meaningful while Rising.
struct AvatarState {
    TilePos pos;
    MoveMode mode = MoveMode::Grounded;
    int budget = 0;

    friend bool operator==(const AvatarState&, const AvatarState&) = default;
};

struct MovementModel {
    int jump_budget = 4;  // rows gained by a full jump
};

/// Mode the avatar ends up in after arriving at `pos`: climbing on a ladder,
/// grounded with something solid or a ladder underneath, else falling.
MoveMode settle(const Grid& grid, TilePos pos);

/// Unit-cost transitions. Grounded: walk sideways or start a jump (up or up
/// diagonal), or mount a ladder below. Rising: keep going up (any diagonal)
/// while budget remains, or release into a fall. Falling: drop down (any
/// diagonal). Climbing: up/down along the ladder or step off sideways.
/// Moves into solid tiles are blocked; moves into hazards, void or off the
/// map are deaths and never returned.
std::vector<AvatarState> successors(const Grid& grid, const AvatarState& state, const MovementModel& model = {});

/// Initial state at `spawn` (settled).
AvatarState start_state(const Grid& grid, TilePos spawn);

struct SolveResult {
    int length = -1;  // -1 when the orb cannot be reached
    std::vector<AvatarState> path;
};

/// A* from spawn to orb with unit steps and a Chebyshev-distance heuristic.
SolveResult solve(const Grid& grid, TilePos spawn, TilePos orb, const MovementModel& model = {});
SolveResult solve(const Level& level, const MovementModel& model = {});

/// Every tile position occupied by some state reachable from spawn.
std::vector<bool> reachable_positions(const Grid& grid, TilePos spawn, const MovementModel& model = {});

/// Reachable fraction of traversable tiles (ladders and passable tiles).
double connectivity(const Grid& grid, TilePos spawn, const MovementModel& model = {});
double connectivity(const Level& level, const MovementModel& model = {});

struct FitnessVector {
    int solution_path_length = -1;
    double connectivity = 0.0;
    friend bool operator==(const FitnessVector&, const FitnessVector&) = default;
};

FitnessVector evaluate_level(const Level& level, const MovementModel& model = {});

}  // namespace mmgan
