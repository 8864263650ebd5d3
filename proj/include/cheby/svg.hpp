#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cheby/geometry.hpp"
#include "cheby/plane_coloring.hpp"

namespace cheby {

// Static SVG rendering of colorings and point-set witnesses over the
// window [0, window]^2. The only place rationals are converted to
// decimals (6 significant digits); everything upstream stays exact.

struct RenderOverlay {
  PointSet points;
  std::vector<IndexTriple> triples;  // highlighted copies among the points
};

std::string render_plane_coloring(const PlaneColoring& coloring, const Rational& window,
                                  const std::optional<RenderOverlay>& overlay = std::nullopt);

std::string render_points(const PointSet& points, const std::vector<IndexTriple>& triples,
                          const Rational& window);

}  // namespace cheby
