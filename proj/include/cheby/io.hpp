#pragma once

#include <string>
#include <vector>

#include "cheby/geometry.hpp"
#include "cheby/line_coloring.hpp"
#include "cheby/plane_coloring.hpp"

namespace cheby {

// Points travel as a JSON array of [x, y] pairs whose coordinates are
// strings "p/q" or "p"; exactness survives the round trip. Parse errors
// carry line/column positions.
PointSet parse_points_json(const std::string& text);
std::string serialize_points_json(const PointSet& s);

// --triangle a,b,c with rational components.
Triangle parse_triangle_csv(const std::string& text);

// Line colorings as TOML: period = "p/q", breaks = ["0", ...],
// colors = [0, ...]. Plane colorings add kind = "horizontal" |
// "diagonal" | "grid"; grid colorings carry px, py, xbreaks, ybreaks and
// a row-major table (one row per y interval).
LineColoring parse_line_coloring_toml(const std::string& text);
std::string serialize_line_coloring_toml(const LineColoring& c);
PlaneColoring parse_plane_coloring_toml(const std::string& text);
std::string serialize_plane_coloring_toml(const PlaneColoring& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cheby
