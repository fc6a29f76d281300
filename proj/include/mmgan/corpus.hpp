#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mmgan/charmap.hpp"
#include "mmgan/tiles.hpp"

namespace mmgan {

struct WindowPos {
    int row = 0;
    int col = 0;
    friend bool operator==(const WindowPos&, const WindowPos&) = default;
};

/// A corpus level plus the walk of the 14x16 screen window from its start to
/// its end.
struct RawLevel {
    std::string id;
    Grid grid;
    WindowPos origin;
    std::vector<Direction> path;
};

struct Annotation {
    WindowPos origin;
    std::vector<Direction> path;
};

struct TypedSample {
    Segment segment;
    SegmentType type = SegmentType::Horizontal;
    std::string source;
    WindowPos window;
    bool corner = false;  // duplicate emitted at a direction change
};

enum class GanMode { OneGAN, MultiGAN };

std::string_view mode_key(GanMode m) noexcept;  // "onegan" / "multigan"
GanMode mode_from_key(std::string_view key);

/// Parses a character grid. Rows must all have the same width; a trailing
/// newline and CR line endings are accepted.
Grid parse_vglc_level(std::string_view text, const CharMap& map = CharMap::standard());

/// Inverse of parse_vglc_level for grids that hold no player tile.
std::string serialize_vglc_level(const Grid& grid, const CharMap& map = CharMap::standard());

/// Annotation text: `origin <row> <col>` header followed by one of R/L/U/D
/// per line. Blank lines and `#` comments are skipped.
Annotation parse_annotation(std::string_view text);
std::string serialize_annotation(const Annotation& a);

/// Replaces codes that never belong in training data: orb -> air, concrete
/// enemies -> generic enemy, player -> air.
Segment sanitize_for_training(const Segment& seg);

/// Visits every window along the path. Emits one directional sample per
/// position (|path|+1) and one extra corner sample wherever the slide
/// direction changes axis.
std::vector<TypedSample> extract_segments(const RawLevel& level);

/// Screen-aligned windows along the path: a new window every 16 horizontal
/// or 14 vertical tiles of travel, with a trailing partial screen snapped to
/// the final window position.
std::vector<Segment> partition_non_overlapping(const RawLevel& level);

struct TypeCounts {
    std::array<std::size_t, 7> by_type{};  // indexed by SegmentType
    std::size_t total = 0;                 // directional samples (corner duplicates excluded)

    std::size_t operator[](SegmentType t) const { return by_type[static_cast<std::size_t>(t)]; }
};

TypeCounts count_samples(const std::vector<TypedSample>& samples);

/// Writes OneGAN (`all.json`) or MultiGAN (one `<type>.json` per type) training
/// sets into `out_dir` and returns the per-type counts.
TypeCounts export_training_sets(const std::vector<TypedSample>& samples, GanMode mode,
                                const std::filesystem::path& out_dir);

std::string dataset_filename(SegmentType t);

void write_dataset(const std::filesystem::path& file, const std::vector<Segment>& segments);
std::vector<Segment> read_dataset(const std::filesystem::path& file);

/// Loads every `<name>.txt` level in `dir` together with its annotation
/// `<name>.path` (next to the level or under `annotations/`). Levels are
/// returned sorted by name.
std::vector<RawLevel> load_corpus(const std::filesystem::path& dir, const CharMap& map = CharMap::standard());

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view content);

}  // namespace mmgan
