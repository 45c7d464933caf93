#pragma once

#include "genusgrid/cycles.hpp"
#include "genusgrid/double_cover.hpp"
#include "genusgrid/grid_surface.hpp"
#include "genusgrid/matching.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <vector>

namespace genusgrid {

using Json = nlohmann::json;

// Schema violations throw Parse; layout and edge errors from
// GenusGrid::build pass through unchanged.

/// {"g","m","lengths","origin_corner","edges":[[pos,pos]]}, pos either
/// {"x","y"} or {"seg":"S1p","idx"}. Ports are written unprimed.
Json to_json(const GenusGrid& grid);
GenusGrid grid_from_json(const Json& j);

/// {"case":"klein|projective","num_vertices","edges":[[u,v]],"crossing":[e]}
/// with crossing listing the flagged edge indices.
Json to_json(const LabeledGraph& g);
LabeledGraph labeled_from_json(const Json& j);

/// {"matching":[e...]} plus "weight" as a decimal string when given.
Json matching_to_json(const std::vector<EdgeIndex>& edges, const std::optional<BigInt>& weight = std::nullopt);
/// Accepts the object form or a bare array of edge indices.
std::vector<EdgeIndex> matching_from_json(const Json& j);

Json to_json(const IsolationReport& report);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace genusgrid
