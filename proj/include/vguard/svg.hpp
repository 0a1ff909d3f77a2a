#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "vguard/geometry.hpp"
#include "vguard/polygon.hpp"

namespace vguard {

struct SvgOverlay {
  std::vector<VertexId> guards;
  std::vector<std::array<Point, 3>> special_triangles;
  std::vector<std::array<Point, 2>> gaps;   // uncovered boundary pieces
  std::vector<std::array<Point, 2>> slits;
};

/// Deterministic SVG drawing with y pointing up. Holes are filled white over
/// the shaded region; triangles and slits are dashed, guards drawn as dots.
std::string render_svg(const PolygonWithHoles& poly, const std::optional<SvgOverlay>& overlay = std::nullopt);

}  // namespace vguard
