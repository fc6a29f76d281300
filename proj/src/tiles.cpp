#include "mmgan/tiles.hpp"

#include <algorithm>
#include <string>

#include "mmgan/charmap.hpp"

namespace mmgan {

Tile tile_from_code(int code) {
    if (!is_valid_code(code)) throw ContractViolation("tile code out of range: " + std::to_string(code));
    return static_cast<Tile>(code);
}

std::string_view tile_name(Tile t) noexcept {
    switch (t) {
        case Tile::Air: return "air";
        case Tile::Solid: return "solid";
        case Tile::Ladder: return "ladder";
        case Tile::Hazard: return "hazard";
        case Tile::Breakable: return "breakable";
        case Tile::MovingPlatform: return "moving_platform";
        case Tile::Cannon: return "cannon";
        case Tile::Orb: return "orb";
        case Tile::Player: return "player";
        case Tile::Null: return "null";
        case Tile::Water: return "water";
        case Tile::Enemy: return "enemy";
        case Tile::WallEnemy: return "wall_enemy";
        case Tile::FlyingEnemy: return "flying_enemy";
    }
    return "?";
}

Segment Segment::from_rows(const std::vector<std::string_view>& rows) {
    if (rows.size() != kSegmentRows) throw FormatError("segment needs 14 rows, got " + std::to_string(rows.size()));
    const CharMap& map = CharMap::standard();
    Segment seg;
    for (int r = 0; r < kSegmentRows; ++r) {
        if (rows[r].size() != kSegmentCols)
            throw FormatError("segment row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                              " columns, expected 16");
        for (int c = 0; c < kSegmentCols; ++c) {
            auto t = map.decode(rows[r][c]);
            if (!t) throw ParseError("unknown tile character '" + std::string(1, rows[r][c]) + "' at row " +
                                     std::to_string(r) + ", col " + std::to_string(c));
            seg.at(r, c) = *t;
        }
    }
    return seg;
}

bool Segment::contains(Tile t) const noexcept {
    return std::find(tiles_.begin(), tiles_.end(), t) != tiles_.end();
}

Segment Grid::window(int row, int col) const {
    if (!in_bounds(row, col) || !in_bounds(row + kSegmentRows - 1, col + kSegmentCols - 1))
        throw ContractViolation("window at (" + std::to_string(row) + "," + std::to_string(col) +
                                ") leaves the grid");
    Segment seg;
    for (int r = 0; r < kSegmentRows; ++r)
        for (int c = 0; c < kSegmentCols; ++c) seg.at(r, c) = at(row + r, col + c);
    return seg;
}

void Grid::paste(const Segment& seg, int row, int col) {
    for (int r = 0; r < kSegmentRows; ++r)
        for (int c = 0; c < kSegmentCols; ++c) at(row + r, col + c) = seg.at(r, c);
}

char direction_token(Direction d) noexcept {
    switch (d) {
        case Direction::Up: return 'U';
        case Direction::Down: return 'D';
        case Direction::Left: return 'L';
        case Direction::Right: return 'R';
    }
    return '?';
}

std::optional<Direction> direction_from_token(char c) noexcept {
    switch (c) {
        case 'U': return Direction::Up;
        case 'D': return Direction::Down;
        case 'L': return Direction::Left;
        case 'R': return Direction::Right;
        default: return std::nullopt;
    }
}

std::string_view direction_name(Direction d) noexcept {
    switch (d) {
        case Direction::Up: return "up";
        case Direction::Down: return "down";
        case Direction::Left: return "left";
        case Direction::Right: return "right";
    }
    return "?";
}

SegmentType corner_type(Direction entry, Direction exit) {
    if (is_horizontal(entry) == is_horizontal(exit))
        throw ContractViolation(std::string("corner needs an axis change, got ") +
                                std::string(direction_name(entry)) + " -> " + std::string(direction_name(exit)));
    using D = Direction;
    // A corner is named by where its walls sit; traversing it backwards
    // (reversing and swapping both directions) gives the same geometry.
    if ((entry == D::Right && exit == D::Up) || (entry == D::Down && exit == D::Left)) return SegmentType::LowerRight;
    if ((entry == D::Right && exit == D::Down) || (entry == D::Up && exit == D::Left)) return SegmentType::UpperRight;
    if ((entry == D::Left && exit == D::Up) || (entry == D::Down && exit == D::Right)) return SegmentType::LowerLeft;
    return SegmentType::UpperLeft;  // L->D, U->R
}

std::string_view type_name(SegmentType t) noexcept {
    switch (t) {
        case SegmentType::Horizontal: return "Horizontal";
        case SegmentType::Up: return "Up";
        case SegmentType::Down: return "Down";
        case SegmentType::UpperLeft: return "UpperLeft";
        case SegmentType::UpperRight: return "UpperRight";
        case SegmentType::LowerLeft: return "LowerLeft";
        case SegmentType::LowerRight: return "LowerRight";
    }
    return "?";
}

std::string_view type_key(SegmentType t) noexcept {
    switch (t) {
        case SegmentType::Horizontal: return "horizontal";
        case SegmentType::Up: return "up";
        case SegmentType::Down: return "down";
        case SegmentType::UpperLeft: return "upper_left";
        case SegmentType::UpperRight: return "upper_right";
        case SegmentType::LowerLeft: return "lower_left";
        case SegmentType::LowerRight: return "lower_right";
    }
    return "?";
}

std::optional<SegmentType> type_from_key(std::string_view key) noexcept {
    for (auto t : kSegmentTypes)
        if (type_key(t) == key || type_name(t) == key) return t;
    return std::nullopt;
}

}  // namespace mmgan
