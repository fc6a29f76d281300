#pragma once

#include <json.hpp>

#include "mmgan/tiles.hpp"

namespace mmgan {

using json = nlohmann::json;

/// 14-element list of 16-element integer lists.
json segment_to_json(const Segment& seg);
Segment segment_from_json(const json& j);

json grid_to_json(const Grid& grid);
Grid grid_from_json(const json& j);

}  // namespace mmgan
