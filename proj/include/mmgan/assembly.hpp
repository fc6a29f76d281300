#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "mmgan/generator.hpp"
#include "mmgan/tiles.hpp"

namespace mmgan {

inline constexpr int kSectionCount = 10;
inline constexpr int kPlacementGenes = 4;
inline constexpr int kSectionSize = kLatentSize + kPlacementGenes;
inline constexpr int kGenomeSize = kSectionSize * kSectionCount;  // 90

/// 90 reals in [-1, 1]: ten sections of five latent genes followed by four
/// placement genes ordered (up, down, left, right).
class Genome {
public:
    Genome() { genes_.fill(0.0); }
    explicit Genome(const std::array<double, kGenomeSize>& genes);
    static Genome from_span(std::span<const double> genes);

    double operator[](std::size_t i) const { return genes_[i]; }
    double& operator[](std::size_t i) { return genes_[i]; }
    const std::array<double, kGenomeSize>& genes() const noexcept { return genes_; }
    std::array<double, kGenomeSize>& genes() noexcept { return genes_; }

    LatentVector latent(int section) const;
    /// Placement genes of a section in (up, down, left, right) order.
    std::array<double, kPlacementGenes> placement(int section) const;

    friend bool operator==(const Genome&, const Genome&) = default;

private:
    std::array<double, kGenomeSize> genes_{};
};

struct SlotPos {
    int row = 0;
    int col = 0;
    friend bool operator==(const SlotPos&, const SlotPos&) = default;
    friend auto operator<=>(const SlotPos&, const SlotPos&) = default;
};

struct PlacementPlan {
    std::vector<SlotPos> slots;           // slots[0] == (0, 0)
    std::vector<Direction> directions;    // directions[i] leads from slots[i] to slots[i+1]
};

struct TilePos {
    int row = 0;
    int col = 0;
    friend bool operator==(const TilePos&, const TilePos&) = default;
    friend auto operator<=>(const TilePos&, const TilePos&) = default;
};

struct PlacedSegment {
    SlotPos slot;
    TilePos origin;  // top-left tile in the fused grid
    SegmentType type = SegmentType::Horizontal;
    Segment segment;
};

struct Level {
    std::vector<PlacedSegment> placements;  // in placement order
    Grid fused;                             // void (9) outside placements
    std::optional<TilePos> spawn;
    std::optional<TilePos> orb;

    /// True when no valid spawn or orb tile exists; such a level is unbeatable.
    bool degenerate() const noexcept { return !spawn || !orb; }
    std::vector<SegmentType> type_trace() const;
    std::vector<Segment> segments() const;
};

/// Greedy slot walk: each section's placement genes rank the four
/// neighbours, the best free one is taken, and the walk stops early when
/// all four are occupied. The last section's placement genes are unused.
PlacementPlan decode_placement(const Genome& genome);

/// Segment types along a plan: corners at axis changes, otherwise the axis
/// of travel. A lone segment is horizontal.
std::vector<SegmentType> route_types(const PlacementPlan& plan);

/// Assigns concrete enemy kinds to generic enemy tiles: ground if standing
/// on something solid, wall if touching a solid tile sideways, else flying.
void concretize_enemies(Grid& grid);

/// Fuses placed segments into one grid (void elsewhere) and places the
/// spawn and orb.
Level assemble_level(std::vector<PlacedSegment> placements);

Level build_level(const Genome& genome, const GeneratorSuite& suite);

}  // namespace mmgan
