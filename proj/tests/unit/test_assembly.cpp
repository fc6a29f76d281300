#include <doctest.h>

#include <set>

#include "mmgan/assembly.hpp"
#include "mmgan/simulator.hpp"
#include "mmgan/stub_library.hpp"
#include "mmgan/variation.hpp"

using namespace mmgan;

namespace {

using D = Direction;

std::array<double, 4> favour(D d) {
    std::array<double, 4> g{-1, -1, -1, -1};
    g[static_cast<std::size_t>(d)] = 1.0;
    return g;
}

Genome genome_walking(const std::vector<D>& moves) {
    Genome g;  // latent z0 = -1 picks the first (flat) stub of each library
    for (int s = 0; s < kSectionCount; ++s) {
        g[static_cast<std::size_t>(s * kSectionSize)] = -1.0;
        const auto p = favour(static_cast<std::size_t>(s) < moves.size() ? moves[static_cast<std::size_t>(s)] : D::Right);
        for (int k = 0; k < 4; ++k) g[static_cast<std::size_t>(s * kSectionSize + kLatentSize + k)] = p[static_cast<std::size_t>(k)];
    }
    return g;
}

PlacementPlan plan_of(const std::vector<D>& dirs) {
    PlacementPlan p;
    p.slots.push_back({0, 0});
    for (auto d : dirs) p.slots.push_back({p.slots.back().row + row_delta(d), p.slots.back().col + col_delta(d)});
    p.directions = dirs;
    return p;
}

}  // namespace

TEST_CASE("genome layout") {
    Genome g;
    for (int i = 0; i < kGenomeSize; ++i) g[static_cast<std::size_t>(i)] = (i % 19) / 20.0;
    CHECK(g.latent(2)[0] == doctest::Approx(g[18]));
    CHECK(g.placement(2)[3] == doctest::Approx(g[26]));
    const std::vector<double> short_genes(89, 0.0);
    CHECK_THROWS_AS(Genome::from_span(short_genes), ContractViolation);
    std::array<double, kGenomeSize> out_of_range{};
    out_of_range[40] = 1.01;
    CHECK_THROWS_AS(Genome{out_of_range}, ContractViolation);
}

TEST_CASE("placement decoding") {
    SUBCASE("all right") {
        const auto plan = decode_placement(genome_walking({}));
        REQUIRE(plan.slots.size() == 10);
        for (int i = 0; i < 10; ++i) CHECK(plan.slots[static_cast<std::size_t>(i)] == SlotPos{0, i});
        CHECK(plan.directions == std::vector<D>(9, D::Right));
    }
    SUBCASE("occupied best choice falls through to the next rank") {
        Genome g = genome_walking({D::Up, D::Right, D::Down});
        const std::array<double, 4> ranked{0.9, 0.1, 0.2, 0.3};
        for (int k = 0; k < 4; ++k) g[static_cast<std::size_t>(3 * kSectionSize + kLatentSize + k)] = ranked[static_cast<std::size_t>(k)];
        const auto plan = decode_placement(g);
        REQUIRE(plan.slots.size() >= 5);
        CHECK(plan.slots[3] == SlotPos{0, 1});
        CHECK(plan.directions[3] == D::Right);
        CHECK(plan.slots[4] == SlotPos{0, 2});
    }
    SUBCASE("equal genes break ties in up, down, left, right order") {
        Genome g;  // all zeros
        const auto plan = decode_placement(g);
        CHECK(plan.directions.front() == D::Up);
        CHECK(plan.directions[1] == D::Up);
    }
    SUBCASE("tightest spiral encloses its eighth segment") {
        const auto plan = decode_placement(
            genome_walking({D::Up, D::Right, D::Right, D::Down, D::Down, D::Left, D::Up, D::Right, D::Right}));
        CHECK(plan.slots.size() == 8);
        CHECK(plan.slots.back() == SlotPos{0, 1});
    }
    SUBCASE("random genomes never revisit a slot") {
        Mt19937Source rng(11);
        for (int k = 0; k < 500; ++k) {
            const auto plan = decode_placement(random_genome(rng));
            CHECK(plan.slots.size() >= 1);
            CHECK(plan.slots.size() <= 10);
            CHECK(plan.directions.size() + 1 == plan.slots.size());
            const std::set<SlotPos> unique(plan.slots.begin(), plan.slots.end());
            CHECK(unique.size() == plan.slots.size());
            const auto types = route_types(plan);
            CHECK(types.size() == plan.slots.size());
            for (std::size_t i = 1; i + 1 < types.size(); ++i)
                CHECK(is_corner(types[i]) == (is_horizontal(plan.directions[i - 1]) != is_horizontal(plan.directions[i])));
        }
    }
}

TEST_CASE("route types") {
    using T = SegmentType;
    CHECK(route_types(plan_of({D::Right, D::Right, D::Up, D::Up})) ==
          std::vector<T>{T::Horizontal, T::Horizontal, T::LowerRight, T::Up, T::Up});
    CHECK(route_types(plan_of({D::Right})) == std::vector<T>{T::Horizontal, T::Horizontal});
    CHECK(route_types(plan_of({})) == std::vector<T>{T::Horizontal});
    CHECK(route_types(plan_of({D::Down, D::Left, D::Left})) ==
          std::vector<T>{T::Down, T::LowerRight, T::Horizontal, T::Horizontal});
    CHECK(route_types(plan_of({D::Up, D::Right, D::Down})) ==
          std::vector<T>{T::Up, T::UpperLeft, T::UpperRight, T::Down});
}

TEST_CASE("enemy concretization") {
    Grid g(5, 5);
    g.at(4, 0) = Tile::Solid;
    g.at(3, 0) = Tile::Enemy;  // standing on solid
    g.at(1, 4) = Tile::Solid;
    g.at(1, 3) = Tile::Enemy;  // touching a wall
    g.at(1, 1) = Tile::Enemy;  // floating
    concretize_enemies(g);
    CHECK(g.at(3, 0) == Tile::Enemy);
    CHECK(g.at(1, 3) == Tile::WallEnemy);
    CHECK(g.at(1, 1) == Tile::FlyingEnemy);
}

TEST_CASE("building levels") {
    SUBCASE("stub multigan corridor") {
        const Level level = build_level(genome_walking({}), stub_multi_gan_suite());
        REQUIRE(level.placements.size() == 10);
        for (auto t : level.type_trace()) CHECK(t == SegmentType::Horizontal);
        CHECK(level.fused.rows() == 14);
        CHECK(level.fused.cols() == 160);
        REQUIRE(level.spawn);
        REQUIRE(level.orb);
        CHECK(*level.spawn == TilePos{12, 0});
        CHECK(*level.orb == TilePos{12, 159});
        CHECK(level.fused.at(12, 159) == Tile::Orb);
        CHECK(evaluate_level(level).solution_path_length == 159);
    }
    SUBCASE("onegan with identical latents yields identical segments") {
        Genome g = genome_walking({});
        for (int s = 0; s < kSectionCount; ++s)
            for (int k = 0; k < kLatentSize; ++k) g[static_cast<std::size_t>(s * kSectionSize + k)] = 0.37 - 0.1 * k;
        const Level level = build_level(g, stub_one_gan_suite());
        const auto segs = level.segments();
        for (const auto& s : segs) CHECK(s == segs.front());
    }
    SUBCASE("all-solid first segment is degenerate") {
        const auto suite = GeneratorSuite::one_gan(std::make_shared<StubGenerator>(std::vector<Segment>{Segment(Tile::Solid)}));
        const Level level = build_level(genome_walking({}), suite);
        CHECK(level.degenerate());
        CHECK(evaluate_level(level).solution_path_length == -1);
    }
    SUBCASE("void fill outside placed segments and deterministic build") {
        Mt19937Source rng(5);
        for (int k = 0; k < 30; ++k) {
            const Genome g = random_genome(rng);
            const Level a = build_level(g, stub_multi_gan_suite());
            const Level b = build_level(g, stub_multi_gan_suite());
            CHECK(a.fused == b.fused);
            CHECK(a.spawn == b.spawn);
            std::set<std::pair<int, int>> covered;
            for (const auto& p : a.placements)
                for (int r = 0; r < kSegmentRows; ++r)
                    for (int c = 0; c < kSegmentCols; ++c) covered.insert({p.origin.row + r, p.origin.col + c});
            for (int r = 0; r < a.fused.rows(); ++r)
                for (int c = 0; c < a.fused.cols(); ++c)
                    if (!covered.contains({r, c})) CHECK(a.fused.at(r, c) == Tile::Null);
        }
    }
    SUBCASE("snaking layout places segments by slot") {
        const Level level = build_level(genome_walking({D::Right, D::Down, D::Left}), stub_multi_gan_suite());
        CHECK(level.placements[1].origin == TilePos{0, 16});
        CHECK(level.placements[2].origin == TilePos{14, 16});
        CHECK(level.placements[3].origin == TilePos{14, 0});
        CHECK(level.type_trace()[1] == SegmentType::UpperRight);
    }
}
