#pragma once

#include <cstddef>
#include <vector>

#include "vguard/cut_polygon.hpp"
#include "vguard/polygon.hpp"

namespace vguard {

/// A triangle with one side on a hole edge and its apex on a different ring.
/// (b, c) follows the hole walk, so the triangle (b, c, apex) is
/// counter-clockwise and lies on the region side of the base.
struct SpecialTriangle {
  EntryId apex;
  std::size_t base_hole = 0;  // ring index in the polygon the triangle was found on
  EntryId b;
  EntryId c;

  friend bool operator==(const SpecialTriangle&, const SpecialTriangle&) = default;
};

/// Checks every special-triangle condition under cut-polygon visibility.
/// (b, c) may be given in either order but must be a hole edge, and the apex
/// must not lie on that hole; otherwise std::invalid_argument is thrown.
bool is_special(const CutPolygon& poly, EntryId apex, EntryId b, EntryId c);

bool is_special(const PolygonWithHoles& poly, VertexId apex, VertexId b, VertexId c);

/// First special triangle in scan order: hole ascending, base edge position
/// ascending, apex (ring, position) ascending. Requires at least one hole.
/// Throws NoSpecialTriangleFound (carrying the polygon state) if none exists.
SpecialTriangle find_special_triangle(const CutPolygon& poly);

/// Every special triangle, in scan order. Exhaustive; meant for fixtures.
std::vector<SpecialTriangle> enumerate_special_triangles(const CutPolygon& poly);

}  // namespace vguard
