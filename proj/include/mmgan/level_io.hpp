#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mmgan/assembly.hpp"
#include "mmgan/json_io.hpp"
#include "mmgan/simulator.hpp"

namespace mmgan {

inline constexpr const char* kLevelFormatTag = "mmgan-level";

/// Integer-grid level document: fused grid, spawn/orb, and per-segment
/// slot, origin, type and tiles. Cannon tiles are written as solid.
json level_to_json(const Level& level);
Level level_from_json(const json& doc);

Level load_level(const std::filesystem::path& file);
void save_level(const std::filesystem::path& file, const Level& level);

/// Character grid; the spawn is marked with `P`.
std::string level_to_vglc(const Level& level);

using Rgb = std::array<std::uint8_t, 3>;

/// Fixed color per tile code.
const std::array<Rgb, kTileCodeCount>& tile_palette();

/// Binary PPM (P6) with `scale` pixels per tile. The spawn is drawn as a
/// white square; `path`, when given, is overlaid in magenta.
std::string render_ppm(const Level& level, int scale = 4, const std::vector<AvatarState>& path = {});

}  // namespace mmgan
