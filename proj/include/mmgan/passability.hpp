#pragma once

#include "mmgan/tiles.hpp"

namespace mmgan {

/// How the movement model treats a tile.
enum class Passability : std::uint8_t {
    Solid,     // stands on it, cannot enter (solid, breakable, moving platform, cannon)
    Climb,     // ladder: enterable and climbable
    Lethal,    // hazard: entering it kills
    Void,      // null tile or outside the map: entering it kills
    Passable,  // air, water, orb, enemies
};

constexpr Passability passability(Tile t) noexcept {
    switch (t) {
        case Tile::Solid:
        case Tile::Breakable:
        case Tile::MovingPlatform:
        case Tile::Cannon: return Passability::Solid;
        case Tile::Ladder: return Passability::Climb;
        case Tile::Hazard: return Passability::Lethal;
        case Tile::Null: return Passability::Void;
        default: return Passability::Passable;
    }
}

/// Grid lookup where anything outside the map is void.
inline Passability passability_at(const Grid& g, int row, int col) noexcept {
    return g.in_bounds(row, col) ? passability(g.at(row, col)) : Passability::Void;
}

constexpr bool is_traversable(Passability p) noexcept { return p == Passability::Passable || p == Passability::Climb; }

}  // namespace mmgan
