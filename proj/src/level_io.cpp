#include "mmgan/level_io.hpp"

#include "mmgan/charmap.hpp"
#include "mmgan/corpus.hpp"

namespace mmgan {

namespace {

json pos_json(const std::optional<TilePos>& p) {
    if (!p) return nullptr;
    return json::array({p->row, p->col});
}

std::optional<TilePos> pos_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return TilePos{j.at(0).get<int>(), j.at(1).get<int>()};
}

}  // namespace

json level_to_json(const Level& level) {
    Grid grid = level.fused;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (grid.at(r, c) == Tile::Cannon) grid.at(r, c) = Tile::Solid;

    json doc;
    doc["format"] = kLevelFormatTag;
    doc["version"] = 1;
    doc["rows"] = grid.rows();
    doc["cols"] = grid.cols();
    doc["spawn"] = pos_json(level.spawn);
    doc["orb"] = pos_json(level.orb);
    doc["degenerate"] = level.degenerate();
    json segs = json::array();
    for (const auto& p : level.placements) {
        segs.push_back({{"slot", {p.slot.row, p.slot.col}},
                        {"origin", {p.origin.row, p.origin.col}},
                        {"type", type_key(p.type)},
                        {"tiles", segment_to_json(p.segment)}});
    }
    doc["segments"] = std::move(segs);
    doc["grid"] = grid_to_json(grid);
    return doc;
}

Level level_from_json(const json& doc) {
    if (doc.value("format", "") != kLevelFormatTag) throw FormatError("not a level document");
    Level level;
    level.fused = grid_from_json(doc.at("grid"));
    level.spawn = pos_from_json(doc.at("spawn"));
    level.orb = pos_from_json(doc.at("orb"));
    for (const auto& s : doc.at("segments")) {
        PlacedSegment p;
        p.slot = {s.at("slot").at(0).get<int>(), s.at("slot").at(1).get<int>()};
        p.origin = {s.at("origin").at(0).get<int>(), s.at("origin").at(1).get<int>()};
        auto t = type_from_key(s.at("type").get<std::string>());
        if (!t) throw FormatError("unknown segment type " + s.at("type").dump());
        p.type = *t;
        p.segment = segment_from_json(s.at("tiles"));
        level.placements.push_back(p);
    }
    auto inside = [&](const std::optional<TilePos>& p) { return !p || level.fused.in_bounds(p->row, p->col); };
    if (!inside(level.spawn) || !inside(level.orb)) throw FormatError("spawn or orb lies outside the grid");
    return level;
}

Level load_level(const std::filesystem::path& file) {
    try {
        return level_from_json(json::parse(read_text_file(file)));
    } catch (const json::exception& e) {
        throw FormatError(file.string() + ": " + e.what());
    }
}

void save_level(const std::filesystem::path& file, const Level& level) {
    write_text_file(file, level_to_json(level).dump() + "\n");
}

std::string level_to_vglc(const Level& level) {
    Grid grid = level.fused;
    for (int r = 0; r < grid.rows(); ++r)
        for (int c = 0; c < grid.cols(); ++c)
            if (grid.at(r, c) == Tile::Cannon) grid.at(r, c) = Tile::Solid;
    if (level.spawn) grid.at(level.spawn->row, level.spawn->col) = Tile::Player;
    return serialize_vglc_level(grid);
}

const std::array<Rgb, kTileCodeCount>& tile_palette() {
    static const std::array<Rgb, kTileCodeCount> palette{{
        {135, 206, 235},  // 0 air: sky blue
        {120, 72, 40},    // 1 solid: brown
        {230, 200, 40},   // 2 ladder: yellow
        {220, 30, 30},    // 3 hazard: red
        {160, 160, 160},  // 4 breakable: grey
        {40, 160, 60},    // 5 moving platform: green
        {90, 90, 90},     // 6 cannon: dark grey
        {255, 140, 0},    // 7 orb: orange
        {255, 255, 255},  // 8 player: white
        {0, 0, 0},        // 9 null: black
        {30, 80, 200},    // 10 water: blue
        {150, 40, 170},   // 11 ground enemy: purple
        {200, 90, 200},   // 12 wall enemy: pink
        {90, 200, 200},   // 13 flying enemy: teal
    }};
    return palette;
}

std::string render_ppm(const Level& level, int scale, const std::vector<AvatarState>& path) {
    if (scale < 1) throw ContractViolation("render scale must be at least 1");
    const Grid& g = level.fused;
    const int w = g.cols() * scale;
    const int h = g.rows() * scale;
    std::vector<Rgb> pixels(static_cast<std::size_t>(w) * h);
    auto fill = [&](int r, int c, Rgb color, int inset) {
        for (int y = r * scale + inset; y < (r + 1) * scale - inset; ++y)
            for (int x = c * scale + inset; x < (c + 1) * scale - inset; ++x)
                pixels[static_cast<std::size_t>(y) * w + x] = color;
    };
    const auto& palette = tile_palette();
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c) fill(r, c, palette[static_cast<std::size_t>(g.at(r, c))], 0);
    const int inset = scale >= 4 ? scale / 4 : 0;
    for (const auto& s : path) fill(s.pos.row, s.pos.col, {255, 0, 255}, inset);
    if (level.spawn) fill(level.spawn->row, level.spawn->col, palette[code_of(Tile::Player)], 0);

    std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
    out.reserve(out.size() + pixels.size() * 3);
    for (const auto& p : pixels) out.append(reinterpret_cast<const char*>(p.data()), 3);
    return out;
}

}  // namespace mmgan
