#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "sgp/certificates.hpp"
#include "sgp/checker.hpp"
#include "sgp/enumeration.hpp"
#include "sgp/geometry.hpp"

namespace sgp::io {

using json = nlohmann::ordered_json;

/// {"dim": d, "points": [[c, ...], ...]} with each coordinate an integer or
/// a "p/q" string. Floating-point numbers are rejected. Throws ParseError or
/// DimensionError.
PointSet parse_point_set(const json& doc);
PointSet parse_point_set_text(std::string_view text);

/// Coordinates are always written as strings so that values survive exactly.
json to_json(const PointSet& points);

/// [[1, 4], [2, 5], [3, 6]] with 1-based labels.
SubsetFamily parse_family(const json& doc, std::size_t n);
json to_json(const SubsetFamily& family);

json to_json(const Verdict& verdict);
json to_json(const ConditionCounts& counts);
json to_json(const Vector& v);

}  // namespace sgp::io
