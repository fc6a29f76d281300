#include "mmgan/assembly.hpp"

#include <algorithm>
#include <set>

#include "mmgan/passability.hpp"

namespace mmgan {

Genome::Genome(const std::array<double, kGenomeSize>& genes) : genes_(genes) {
    for (double g : genes_)
        if (!(g >= -1.0 && g <= 1.0)) throw ContractViolation("gene outside [-1, 1]");
}

Genome Genome::from_span(std::span<const double> genes) {
    if (genes.size() != kGenomeSize)
        throw ContractViolation("genome needs 90 genes, got " + std::to_string(genes.size()));
    std::array<double, kGenomeSize> a{};
    std::copy(genes.begin(), genes.end(), a.begin());
    return Genome(a);
}

LatentVector Genome::latent(int section) const {
    std::array<double, kLatentSize> z{};
    std::copy_n(genes_.begin() + section * kSectionSize, kLatentSize, z.begin());
    return LatentVector(z);
}

std::array<double, kPlacementGenes> Genome::placement(int section) const {
    std::array<double, kPlacementGenes> p{};
    std::copy_n(genes_.begin() + section * kSectionSize + kLatentSize, kPlacementGenes, p.begin());
    return p;
}

PlacementPlan decode_placement(const Genome& genome) {
    PlacementPlan plan;
    plan.slots.push_back({0, 0});
    std::set<SlotPos> occupied{{0, 0}};

    for (int section = 0; section + 1 < kSectionCount; ++section) {
        const auto genes = genome.placement(section);
        // kDirections is (up, down, left, right); stable sort keeps that order on ties.
        std::array<int, kPlacementGenes> order{0, 1, 2, 3};
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return genes[a] > genes[b]; });

        const SlotPos here = plan.slots.back();
        bool placed = false;
        for (int idx : order) {
            const Direction d = kDirections[idx];
            const SlotPos next{here.row + row_delta(d), here.col + col_delta(d)};
            if (occupied.contains(next)) continue;
            occupied.insert(next);
            plan.slots.push_back(next);
            plan.directions.push_back(d);
            placed = true;
            break;
        }
        if (!placed) break;
    }
    return plan;
}

std::vector<SegmentType> route_types(const PlacementPlan& plan) {
    const std::size_t n = plan.slots.size();
    std::vector<SegmentType> types;
    types.reserve(n);
    if (n == 1) return {SegmentType::Horizontal};
    for (std::size_t i = 0; i < n; ++i) {
        if (i == 0) {
            types.push_back(axis_type(plan.directions.front()));
        } else if (i + 1 == n) {
            types.push_back(axis_type(plan.directions.back()));
        } else {
            const Direction entry = plan.directions[i - 1];
            const Direction exit = plan.directions[i];
            types.push_back(is_horizontal(entry) == is_horizontal(exit) ? axis_type(entry) : corner_type(entry, exit));
        }
    }
    return types;
}

void concretize_enemies(Grid& grid) {
    const Grid before = grid;
    auto solid = [&](int r, int c) { return passability_at(before, r, c) == Passability::Solid; };
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) {
            if (before.at(r, c) != Tile::Enemy) continue;
            if (solid(r + 1, c)) grid.at(r, c) = Tile::Enemy;
            else if (solid(r, c - 1) || solid(r, c + 1)) grid.at(r, c) = Tile::WallEnemy;
            else grid.at(r, c) = Tile::FlyingEnemy;
        }
    }
}

std::vector<SegmentType> Level::type_trace() const {
    std::vector<SegmentType> out;
    for (const auto& p : placements) out.push_back(p.type);
    return out;
}

std::vector<Segment> Level::segments() const {
    std::vector<Segment> out;
    for (const auto& p : placements) out.push_back(p.segment);
    return out;
}

namespace {

bool standable(const Grid& g, int r, int c) {
    return is_traversable(passability_at(g, r, c)) && passability_at(g, r + 1, c) == Passability::Solid;
}

}  // namespace

Level assemble_level(std::vector<PlacedSegment> placements) {
    if (placements.empty()) throw ContractViolation("level needs at least one segment");
    int min_r = placements[0].slot.row, max_r = min_r, min_c = placements[0].slot.col, max_c = min_c;
    for (const auto& p : placements) {
        min_r = std::min(min_r, p.slot.row);
        max_r = std::max(max_r, p.slot.row);
        min_c = std::min(min_c, p.slot.col);
        max_c = std::max(max_c, p.slot.col);
    }

    Level level;
    level.fused = Grid((max_r - min_r + 1) * kSegmentRows, (max_c - min_c + 1) * kSegmentCols, Tile::Null);
    for (auto& p : placements) {
        p.origin = {(p.slot.row - min_r) * kSegmentRows, (p.slot.col - min_c) * kSegmentCols};
        level.fused.paste(p.segment, p.origin.row, p.origin.col);
    }
    concretize_enemies(level.fused);

    const TilePos first = placements.front().origin;
    for (int r = 0; r < kSegmentRows && !level.spawn; ++r)
        for (int c = 0; c < kSegmentCols && !level.spawn; ++c)
            if (standable(level.fused, first.row + r, first.col + c)) level.spawn = TilePos{first.row + r, first.col + c};

    const TilePos last = placements.back().origin;
    for (int r = kSegmentRows - 1; r >= 0 && !level.orb; --r)
        for (int c = kSegmentCols - 1; c >= 0 && !level.orb; --c)
            if (standable(level.fused, last.row + r, last.col + c)) level.orb = TilePos{last.row + r, last.col + c};
    if (level.orb) level.fused.at(level.orb->row, level.orb->col) = Tile::Orb;

    level.placements = std::move(placements);
    return level;
}

Level build_level(const Genome& genome, const GeneratorSuite& suite) {
    const PlacementPlan plan = decode_placement(genome);
    const auto types = route_types(plan);
    std::vector<PlacedSegment> placements;
    placements.reserve(plan.slots.size());
    for (std::size_t i = 0; i < plan.slots.size(); ++i) {
        PlacedSegment p;
        p.slot = plan.slots[i];
        p.type = types[i];
        p.segment = suite.generate(types[i], genome.latent(static_cast<int>(i)));
        placements.push_back(p);
    }
    return assemble_level(std::move(placements));
}

}  // namespace mmgan
