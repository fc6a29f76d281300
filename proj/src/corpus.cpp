#include "mmgan/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mmgan/json_io.hpp"

namespace mmgan {

namespace fs = std::filesystem;

std::string_view mode_key(GanMode m) noexcept { return m == GanMode::OneGAN ? "onegan" : "multigan"; }

GanMode mode_from_key(std::string_view key) {
    if (key == "onegan" || key == "OneGAN") return GanMode::OneGAN;
    if (key == "multigan" || key == "MultiGAN") return GanMode::MultiGAN;
    throw ConfigError("unknown mode '" + std::string(key) + "' (expected onegan or multigan)");
}

std::string read_text_file(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const fs::path& file, std::string_view content) {
    if (file.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(file.parent_path(), ec);
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot write " + file.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for " + file.string());
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

Grid parse_vglc_level(std::string_view text, const CharMap& map) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw FormatError("empty level");
    const auto width = lines.front().size();
    for (std::size_t r = 0; r < lines.size(); ++r)
        if (lines[r].size() != width)
            throw FormatError("ragged level: row " + std::to_string(r) + " has " + std::to_string(lines[r].size()) +
                              " characters, expected " + std::to_string(width));

    Grid grid(static_cast<int>(lines.size()), static_cast<int>(width));
    for (std::size_t r = 0; r < lines.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            auto t = map.decode(lines[r][c]);
            if (!t)
                throw ParseError("unknown tile character '" + std::string(1, lines[r][c]) + "' at row " +
                                 std::to_string(r) + ", col " + std::to_string(c));
            grid.at(static_cast<int>(r), static_cast<int>(c)) = *t;
        }
    }
    return grid;
}

std::string serialize_vglc_level(const Grid& grid, const CharMap& map) {
    std::string out;
    out.reserve(static_cast<std::size_t>(grid.rows()) * (grid.cols() + 1));
    for (int r = 0; r < grid.rows(); ++r) {
        for (int c = 0; c < grid.cols(); ++c) out.push_back(map.encode(grid.at(r, c)));
        out.push_back('\n');
    }
    return out;
}

Annotation parse_annotation(std::string_view text) {
    Annotation a;
    bool have_origin = false;
    int line_no = 0;
    for (auto line : split_lines(text)) {
        ++line_no;
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (!have_origin) {
            std::istringstream ss{std::string(line)};
            std::string tag;
            if (!(ss >> tag >> a.origin.row >> a.origin.col) || tag != "origin")
                throw FormatError("annotation line " + std::to_string(line_no) + ": expected 'origin <row> <col>'");
            have_origin = true;
            continue;
        }
        auto d = line.size() == 1 ? direction_from_token(line.front()) : std::nullopt;
        if (!d)
            throw FormatError("annotation line " + std::to_string(line_no) + ": bad direction token '" +
                              std::string(line) + "'");
        a.path.push_back(*d);
    }
    if (!have_origin) throw FormatError("annotation is missing its origin header");
    return a;
}

std::string serialize_annotation(const Annotation& a) {
    std::string out = "origin " + std::to_string(a.origin.row) + " " + std::to_string(a.origin.col) + "\n";
    for (auto d : a.path) {
        out.push_back(direction_token(d));
        out.push_back('\n');
    }
    return out;
}

Segment sanitize_for_training(const Segment& seg) {
    Segment out = seg;
    for (int r = 0; r < kSegmentRows; ++r) {
        for (int c = 0; c < kSegmentCols; ++c) {
            Tile& t = out.at(r, c);
            if (t == Tile::Orb || t == Tile::Player) t = Tile::Air;
            else if (t == Tile::WallEnemy || t == Tile::FlyingEnemy) t = Tile::Enemy;
        }
    }
    return out;
}

namespace {

/// Window positions visited by the path, starting at the origin.
std::vector<WindowPos> walk_windows(const RawLevel& level) {
    const Grid& g = level.grid;
    if (g.rows() < kSegmentRows || g.cols() < kSegmentCols)
        throw ExtractionError(level.id + ": level is smaller than one screen");
    auto fits = [&](WindowPos p) {
        return p.row >= 0 && p.col >= 0 && p.row + kSegmentRows <= g.rows() && p.col + kSegmentCols <= g.cols();
    };
    std::vector<WindowPos> out;
    out.reserve(level.path.size() + 1);
    WindowPos p = level.origin;
    if (!fits(p)) throw ExtractionError(level.id + ": window origin lies outside the level");
    out.push_back(p);
    for (std::size_t i = 0; i < level.path.size(); ++i) {
        p.row += row_delta(level.path[i]);
        p.col += col_delta(level.path[i]);
        if (!fits(p))
            throw ExtractionError(level.id + ": slide " + std::to_string(i + 1) + " (" +
                                  std::string(direction_name(level.path[i])) + ") moves the window out of bounds");
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<TypedSample> extract_segments(const RawLevel& level) {
    std::vector<TypedSample> samples;
    if (level.path.empty()) return samples;
    const auto windows = walk_windows(level);
    const auto& path = level.path;

    for (std::size_t k = 0; k < windows.size(); ++k) {
        const Direction incoming = k == 0 ? path.front() : path[k - 1];
        const Segment seg = sanitize_for_training(level.grid.window(windows[k].row, windows[k].col));
        samples.push_back({seg, axis_type(incoming), level.id, windows[k], false});
        if (k >= 1 && k < path.size() && is_horizontal(path[k - 1]) != is_horizontal(path[k]))
            samples.push_back({seg, corner_type(path[k - 1], path[k]), level.id, windows[k], true});
    }
    return samples;
}

std::vector<Segment> partition_non_overlapping(const RawLevel& level) {
    std::vector<Segment> out;
    const auto windows = walk_windows(level);
    WindowPos last = windows.front();
    out.push_back(level.grid.window(last.row, last.col));
    for (std::size_t k = 1; k < windows.size(); ++k) {
        const WindowPos p = windows[k];
        if (std::abs(p.col - last.col) >= kSegmentCols || std::abs(p.row - last.row) >= kSegmentRows) {
            out.push_back(level.grid.window(p.row, p.col));
            last = p;
        }
    }
    if (!(windows.back() == last)) out.push_back(level.grid.window(windows.back().row, windows.back().col));
    for (auto& s : out) s = sanitize_for_training(s);
    return out;
}

TypeCounts count_samples(const std::vector<TypedSample>& samples) {
    TypeCounts counts;
    for (const auto& s : samples) {
        ++counts.by_type[static_cast<std::size_t>(s.type)];
        if (!s.corner) ++counts.total;
    }
    return counts;
}

std::string dataset_filename(SegmentType t) { return std::string(type_key(t)) + ".json"; }

void write_dataset(const fs::path& file, const std::vector<Segment>& segments) {
    json doc = json::array();
    for (const auto& s : segments) doc.push_back(segment_to_json(s));
    write_text_file(file, doc.dump() + "\n");
}

std::vector<Segment> read_dataset(const fs::path& file) {
    json doc;
    try {
        doc = json::parse(read_text_file(file));
    } catch (const json::parse_error& e) {
        throw FormatError(file.string() + ": " + e.what());
    }
    if (!doc.is_array()) throw FormatError(file.string() + ": dataset must be a list of segments");
    std::vector<Segment> out;
    out.reserve(doc.size());
    for (const auto& s : doc) out.push_back(segment_from_json(s));
    return out;
}

TypeCounts export_training_sets(const std::vector<TypedSample>& samples, GanMode mode, const fs::path& out_dir) {
    if (samples.empty()) throw ContractViolation("no samples to export");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    if (mode == GanMode::OneGAN) {
        std::vector<Segment> all;
        for (const auto& s : samples)
            if (!s.corner) all.push_back(s.segment);
        write_dataset(out_dir / "all.json", all);
    } else {
        for (auto t : kSegmentTypes) {
            std::vector<Segment> subset;
            for (const auto& s : samples)
                if (s.type == t) subset.push_back(s.segment);
            write_dataset(out_dir / dataset_filename(t), subset);
        }
    }
    return count_samples(samples);
}

std::vector<RawLevel> load_corpus(const fs::path& dir, const CharMap& map) {
    if (!fs::is_directory(dir)) throw IoError("corpus directory not found: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw IoError("no level files (*.txt) in " + dir.string());

    std::vector<RawLevel> levels;
    for (const auto& file : files) {
        const auto stem = file.stem().string();
        fs::path ann = dir / (stem + ".path");
        if (!fs::exists(ann)) ann = dir / "annotations" / (stem + ".path");
        if (!fs::exists(ann)) throw IoError("missing annotation file for level " + stem);

        RawLevel level;
        level.id = stem;
        try {
            level.grid = parse_vglc_level(read_text_file(file), map);
            auto a = parse_annotation(read_text_file(ann));
            level.origin = a.origin;
            level.path = std::move(a.path);
        } catch (const Error& e) {
            throw ParseError(stem + ": " + e.what());
        }
        levels.push_back(std::move(level));
    }
    return levels;
}

}  // namespace mmgan
