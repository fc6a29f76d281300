#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mmgan/errors.hpp"

namespace mmgan {

/// Integer tile codes used in every grid document.
enum class Tile : std::uint8_t {
    Air = 0,
    Solid = 1,
    Ladder = 2,
    Hazard = 3,
    Breakable = 4,
    MovingPlatform = 5,
    Cannon = 6,
    Orb = 7,
    Player = 8,
    Null = 9,
    Water = 10,
    Enemy = 11,  // generic placeholder; also the concrete ground enemy
    WallEnemy = 12,
    FlyingEnemy = 13,
};

inline constexpr int kTileCodeCount = 14;

inline constexpr bool is_valid_code(int code) noexcept { return code >= 0 && code < kTileCodeCount; }

inline constexpr int code_of(Tile t) noexcept { return static_cast<int>(t); }

/// Throws ContractViolation for codes outside 0..13.
Tile tile_from_code(int code);

/// Codes that never occur in training data: orb, player and the concrete enemy kinds.
inline constexpr bool is_training_code(Tile t) noexcept {
    return t != Tile::Orb && t != Tile::Player && t != Tile::WallEnemy && t != Tile::FlyingEnemy;
}

std::string_view tile_name(Tile t) noexcept;

// ---------------------------------------------------------------------------

inline constexpr int kSegmentRows = 14;
inline constexpr int kSegmentCols = 16;
inline constexpr int kSegmentTiles = kSegmentRows * kSegmentCols;

/// One screen of content: 14 rows by 16 columns, row 0 at the top.
class Segment {
public:
    Segment() { tiles_.fill(Tile::Air); }
    explicit Segment(Tile fill) { tiles_.fill(fill); }

    /// Builds a segment from 14 strings of 16 characters using the default
    /// character map. Handy for fixtures.
    static Segment from_rows(const std::vector<std::string_view>& rows);

    Tile at(int row, int col) const { return tiles_[index(row, col)]; }
    Tile& at(int row, int col) { return tiles_[index(row, col)]; }

    const std::array<Tile, kSegmentTiles>& tiles() const noexcept { return tiles_; }

    bool contains(Tile t) const noexcept;

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment& a, const Segment& b) { return a.tiles_ <=> b.tiles_; }

private:
    static std::size_t index(int row, int col) {
        return static_cast<std::size_t>(row) * kSegmentCols + static_cast<std::size_t>(col);
    }
    std::array<Tile, kSegmentTiles> tiles_{};
};

/// Dynamically sized tile grid (levels, fused maps).
class Grid {
public:
    Grid() = default;
    Grid(int rows, int cols, Tile fill = Tile::Air)
        : rows_(rows), cols_(cols), tiles_(static_cast<std::size_t>(rows) * cols, fill) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool in_bounds(int row, int col) const noexcept {
        return row >= 0 && col >= 0 && row < rows_ && col < cols_;
    }

    Tile at(int row, int col) const { return tiles_[index(row, col)]; }
    Tile& at(int row, int col) { return tiles_[index(row, col)]; }

    /// 14x16 window with its top-left corner at (row, col).
    Segment window(int row, int col) const;
    void paste(const Segment& seg, int row, int col);

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Tile> tiles_;
};

// ---------------------------------------------------------------------------

enum class Direction : std::uint8_t { Up, Down, Left, Right };

inline constexpr std::array<Direction, 4> kDirections{Direction::Up, Direction::Down, Direction::Left,
                                                      Direction::Right};

inline constexpr bool is_horizontal(Direction d) noexcept {
    return d == Direction::Left || d == Direction::Right;
}

inline constexpr int row_delta(Direction d) noexcept {
    return d == Direction::Up ? -1 : d == Direction::Down ? 1 : 0;
}
inline constexpr int col_delta(Direction d) noexcept {
    return d == Direction::Left ? -1 : d == Direction::Right ? 1 : 0;
}

char direction_token(Direction d) noexcept;
std::optional<Direction> direction_from_token(char c) noexcept;
std::string_view direction_name(Direction d) noexcept;

enum class SegmentType : std::uint8_t {
    Horizontal,
    Up,
    Down,
    UpperLeft,
    UpperRight,
    LowerLeft,
    LowerRight,
};

inline constexpr std::array<SegmentType, 7> kSegmentTypes{
    SegmentType::Horizontal, SegmentType::Up,         SegmentType::Down,      SegmentType::UpperLeft,
    SegmentType::UpperRight, SegmentType::LowerLeft, SegmentType::LowerRight};

inline constexpr std::array<SegmentType, 4> kCornerTypes{SegmentType::UpperLeft, SegmentType::UpperRight,
                                                         SegmentType::LowerLeft, SegmentType::LowerRight};

inline constexpr bool is_corner(SegmentType t) noexcept {
    return t != SegmentType::Horizontal && t != SegmentType::Up && t != SegmentType::Down;
}

/// Directional (non-corner) type implied by a slide or placement direction.
inline constexpr SegmentType axis_type(Direction d) noexcept {
    return is_horizontal(d) ? SegmentType::Horizontal
                            : (d == Direction::Up ? SegmentType::Up : SegmentType::Down);
}

/// Corner type for a path that enters a segment moving `entry` and leaves
/// moving `exit`. The two directions must lie on different axes.
SegmentType corner_type(Direction entry, Direction exit);

std::string_view type_name(SegmentType t) noexcept;  // "Horizontal", "UpperLeft", ...
std::string_view type_key(SegmentType t) noexcept;   // "horizontal", "upper_left", ...
std::optional<SegmentType> type_from_key(std::string_view key) noexcept;

}  // namespace mmgan
