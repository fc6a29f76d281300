#include "mmgan/json_io.hpp"

#include <string>

namespace mmgan {

namespace {

Tile tile_from_json(const json& v, std::size_t r, std::size_t c) {
    if (!v.is_number_integer()) throw FormatError("non-integer tile at [" + std::to_string(r) + "][" + std::to_string(c) + "]");
    int code = v.get<int>();
    if (!is_valid_code(code))
        throw FormatError("tile code " + std::to_string(code) + " out of range at [" + std::to_string(r) + "][" +
                          std::to_string(c) + "]");
    return static_cast<Tile>(code);
}

}  // namespace

json segment_to_json(const Segment& seg) {
    json rows = json::array();
    for (int r = 0; r < kSegmentRows; ++r) {
        json row = json::array();
        for (int c = 0; c < kSegmentCols; ++c) row.push_back(code_of(seg.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Segment segment_from_json(const json& j) {
    if (!j.is_array() || j.size() != kSegmentRows)
        throw FormatError("segment must be a list of 14 rows");
    Segment seg;
    for (std::size_t r = 0; r < kSegmentRows; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != kSegmentCols)
            throw FormatError("segment row " + std::to_string(r) + " must hold 16 codes");
        for (std::size_t c = 0; c < kSegmentCols; ++c)
            seg.at(static_cast<int>(r), static_cast<int>(c)) = tile_from_json(row[c], r, c);
    }
    return seg;
}

json grid_to_json(const Grid& grid) {
    json rows = json::array();
    for (int r = 0; r < grid.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < grid.cols(); ++c) row.push_back(code_of(grid.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Grid grid_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw FormatError("grid must be a non-empty list of rows");
    const auto rows = j.size();
    const auto cols = j[0].size();
    Grid grid(static_cast<int>(rows), static_cast<int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw FormatError("ragged grid row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c)
            grid.at(static_cast<int>(r), static_cast<int>(c)) = tile_from_json(j[r][c], r, c);
    }
    return grid;
}

}  // namespace mmgan
