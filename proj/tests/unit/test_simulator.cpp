#include <doctest.h>

#include <algorithm>

#include "mmgan/simulator.hpp"
#include "mmgan/stub_library.hpp"
#include "mmgan/variation.hpp"
#include "support/oracles.hpp"

using namespace mmgan;

namespace {

Grid floor_grid(int rows, int cols) {
    Grid g(rows, cols);
    for (int c = 0; c < cols; ++c) g.at(rows - 1, c) = Tile::Solid;
    return g;
}

Grid tunnel(int cols) {
    Grid g(3, cols, Tile::Solid);
    for (int c = 0; c < cols; ++c) g.at(1, c) = Tile::Air;
    return g;
}

bool has(const std::vector<AvatarState>& v, TilePos p, MoveMode m) {
    return std::any_of(v.begin(), v.end(), [&](const AvatarState& s) { return s.pos == p && s.mode == m; });
}

}  // namespace

TEST_CASE("passability classes") {
    CHECK(passability(Tile::Hazard) == Passability::Lethal);
    CHECK(passability(Tile::Enemy) == Passability::Passable);
    CHECK(passability(Tile::WallEnemy) == Passability::Passable);
    CHECK(passability(Tile::Water) == Passability::Passable);
    CHECK(passability(Tile::Orb) == Passability::Passable);
    CHECK(passability(Tile::Ladder) == Passability::Climb);
    CHECK(passability(Tile::Null) == Passability::Void);
    for (auto t : {Tile::Solid, Tile::Breakable, Tile::MovingPlatform, Tile::Cannon})
        CHECK(passability(t) == Passability::Solid);
    const Grid g(2, 2);
    CHECK(passability_at(g, -1, 0) == Passability::Void);
    CHECK(passability_at(g, 0, 2) == Passability::Void);
}

TEST_CASE("successor transitions") {
    SUBCASE("walking along a floor") {
        const Grid g = floor_grid(4, 4);
        const auto next = successors(g, {{2, 1}, MoveMode::Grounded, 0});
        CHECK(has(next, {2, 2}, MoveMode::Grounded));
        CHECK(has(next, {2, 0}, MoveMode::Grounded));
        CHECK(has(next, {1, 1}, MoveMode::Rising));
        CHECK(has(next, {1, 0}, MoveMode::Rising));
        CHECK(has(next, {1, 2}, MoveMode::Rising));
    }
    SUBCASE("walking off a ledge starts a fall") {
        Grid g(4, 4);
        g.at(3, 0) = Tile::Solid;
        CHECK(has(successors(g, {{2, 0}, MoveMode::Grounded, 0}), {2, 1}, MoveMode::Falling));
    }
    auto max_height = [](const Grid& g, TilePos start) {
        std::vector<bool> seen = reachable_positions(g, start);
        int top = start.row;
        for (int r = 0; r < g.rows(); ++r)
            for (int c = 0; c < g.cols(); ++c)
                if (seen[static_cast<std::size_t>(r * g.cols() + c)]) top = std::min(top, r);
        return start.row - top;
    };
    SUBCASE("jump height is capped by the ceiling and the budget") {
        Grid low = floor_grid(10, 3);
        for (int c = 0; c < 3; ++c) low.at(4, c) = Tile::Solid;  // rows 5..7 open above row 8
        CHECK(max_height(low, {8, 1}) == 3);
        CHECK(max_height(floor_grid(10, 3), {8, 1}) == 4);
        CHECK(max_height(floor_grid(10, 3), {8, 1}) == MovementModel{}.jump_budget);
    }
    SUBCASE("falling above a hazard keeps only safe diagonals") {
        Grid g(3, 3);
        g.at(2, 1) = Tile::Hazard;
        const auto next = successors(g, {{1, 1}, MoveMode::Falling, 0});
        CHECK(next.size() == 2);
        CHECK(has(next, {2, 0}, MoveMode::Falling));
        CHECK(has(next, {2, 2}, MoveMode::Falling));
    }
    SUBCASE("never steps into void or off the map") {
        Grid g = floor_grid(3, 3);
        g.at(1, 2) = Tile::Null;
        for (const auto& s : successors(g, {{1, 1}, MoveMode::Grounded, 0})) CHECK(s.pos != TilePos{1, 2});
        for (const auto& s : successors(g, {{1, 0}, MoveMode::Grounded, 0})) CHECK(s.pos.col >= 0);
    }
    SUBCASE("ladders") {
        Grid g = floor_grid(5, 3);
        for (int r = 0; r < 4; ++r) g.at(r, 1) = Tile::Ladder;
        g.at(4, 1) = Tile::Solid;
        CHECK(settle(g, {2, 1}) == MoveMode::Climbing);
        CHECK(settle(g, {0, 0}) == MoveMode::Falling);
        const auto next = successors(g, {{2, 1}, MoveMode::Climbing, 0});
        CHECK(has(next, {1, 1}, MoveMode::Climbing));
        CHECK(has(next, {3, 1}, MoveMode::Climbing));
        CHECK(has(next, {2, 0}, MoveMode::Falling));
        Grid top = floor_grid(4, 3);
        top.at(3, 1) = Tile::Ladder;
        CHECK(settle(top, {2, 1}) == MoveMode::Grounded);
        CHECK(has(successors(top, {{2, 1}, MoveMode::Grounded, 0}), {3, 1}, MoveMode::Climbing));
    }
    SUBCASE("rising can always release") {
        const Grid g(5, 5);
        const auto next = successors(g, {{2, 2}, MoveMode::Rising, 0});
        REQUIRE(next.size() == 1);
        CHECK(next[0].pos == TilePos{2, 2});
        CHECK(next[0].mode == MoveMode::Falling);
    }
}

TEST_CASE("solving") {
    SUBCASE("flat corridor") {
        const Grid g = floor_grid(14, 16);
        const auto sol = solve(g, {12, 0}, {12, 15});
        CHECK(sol.length == 15);
        CHECK(oracle::bfs_length(g, {12, 0}, {12, 15}) == 15);
        CHECK(sol.path.size() == 16);
        CHECK(oracle::path_is_valid(g, sol.path));
    }
    SUBCASE("sealed orb") {
        Grid g = floor_grid(14, 16);
        for (int r = 0; r < 13; ++r) g.at(r, 10) = Tile::Solid;
        const auto sol = solve(g, {12, 0}, {12, 15});
        CHECK(sol.length == -1);
        CHECK(sol.path.empty());
    }
    SUBCASE("spawn on the orb") {
        const auto sol = solve(floor_grid(4, 4), {2, 2}, {2, 2});
        CHECK(sol.length == 0);
        CHECK(sol.path.size() == 1);
    }
    SUBCASE("jumping over a pit of spikes") {
        Grid g = floor_grid(8, 12);
        for (int c = 5; c <= 7; ++c) g.at(7, c) = Tile::Hazard;
        const auto sol = solve(g, {6, 0}, {6, 11});
        CHECK(sol.length > 11);
        CHECK(sol.length == oracle::bfs_length(g, {6, 0}, {6, 11}));
        CHECK(oracle::path_is_valid(g, sol.path));
    }
    SUBCASE("matches breadth-first search on stub levels") {
        Mt19937Source rng(17);
        int beaten = 0;
        for (int k = 0; k < 15; ++k) {
            const Level level = build_level(random_genome(rng), stub_multi_gan_suite());
            if (level.degenerate()) continue;
            const auto sol = solve(level);
            CHECK(sol.length == oracle::bfs_length(level.fused, *level.spawn, *level.orb));
            if (sol.length >= 0) {
                ++beaten;
                CHECK(oracle::path_is_valid(level.fused, sol.path));
                CHECK(sol.path.back().pos == *level.orb);
            }
        }
        CHECK(beaten > 0);
    }
}

TEST_CASE("connectivity") {
    SUBCASE("open tunnel is fully reachable") {
        CHECK(connectivity(tunnel(16), {1, 0}) == doctest::Approx(1.0));
    }
    SUBCASE("a wall halves the tunnel and never increases connectivity") {
        Grid g = tunnel(16);
        const double before = connectivity(g, {1, 0});
        g.at(1, 8) = Tile::Solid;
        const double after = connectivity(g, {1, 0});
        CHECK(after == doctest::Approx(8.0 / 15.0));
        CHECK(after <= before);
    }
    SUBCASE("two sealed segments") {
        Segment a(Tile::Solid);
        for (int r = 11; r <= 12; ++r)
            for (int c = 0; c < 15; ++c) a.at(r, c) = Tile::Air;
        Segment b;
        for (int c = 0; c < kSegmentCols; ++c) b.at(13, c) = Tile::Solid;
        std::vector<PlacedSegment> placed{{{0, 0}, {0, 0}, SegmentType::Horizontal, a},
                                          {{0, 1}, {0, 16}, SegmentType::Horizontal, b}};
        const Level level = assemble_level(placed);
        REQUIRE(level.spawn);
        CHECK(*level.spawn == TilePos{12, 0});
        CHECK(connectivity(level) == doctest::Approx(30.0 / (30.0 + 13.0 * 16.0)));
        CHECK(solve(level).length == -1);
    }
    SUBCASE("all solid") {
        CHECK(connectivity(Grid(14, 16, Tile::Solid), {0, 0}) == 0.0);
    }
    SUBCASE("bounded on random stub levels") {
        Mt19937Source rng(23);
        for (int k = 0; k < 20; ++k) {
            const Level level = build_level(random_genome(rng), stub_one_gan_suite());
            const double v = connectivity(level);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}
