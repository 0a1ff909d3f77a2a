#include "vguard/special_triangle.hpp"

#include <array>
#include <optional>
#include <stdexcept>

#include "vguard/errors.hpp"

namespace vguard {

namespace {

// Assumes (b, c) is a walk edge of hole ring `hole` and the apex sits elsewhere.
bool check_candidate(const CutPolygon& poly, EntryId apex, EntryId b, EntryId c) {
  const Point& pa = poly.point(apex);
  const Point& pb = poly.point(b);
  const Point& pc = poly.point(c);
  if (orient(pb, pc, pa) != Orientation::CounterClockwise) return false;
  const std::array<EntryId, 3> corners{b, c, apex};
  const std::array<std::array<EntryId, 2>, 1> own{{{b, c}}};
  if (!triangle_is_clear(poly.rings(), poly.entries(), corners, own)) return false;
  if (!cut_sees(poly, apex, b) || !cut_sees(poly, apex, c)) return false;
  const Point centroid(Scalar((pa.x + pb.x + pc.x) / 3), Scalar((pa.y + pb.y + pc.y) / 3));
  return poly.classify(centroid) == RegionPosition::Inside;
}

template <class Visit>
void scan(const CutPolygon& poly, Visit&& visit) {
  const auto& rings = poly.rings();
  for (std::size_t k = 1; k < rings.size(); ++k) {
    const auto& hole = rings[k];
    for (std::size_t i = 0; i < hole.size(); ++i) {
      const EntryId b = hole[i];
      const EntryId c = hole[(i + 1) % hole.size()];
      for (std::size_t r = 0; r < rings.size(); ++r) {
        if (r == k) continue;
        for (const EntryId apex : rings[r])
          if (check_candidate(poly, apex, b, c) && !visit(SpecialTriangle{apex, k, b, c})) return;
      }
    }
  }
}

}  // namespace

bool is_special(const CutPolygon& poly, EntryId apex, EntryId b, EntryId c) {
  const EntryLocation lb = poly.locate(b);
  const EntryLocation lc = poly.locate(c);
  if (lb.ring == 0 || lb.ring != lc.ring) throw std::invalid_argument("base is not an edge of a hole");
  if (poly.next(c) == b && poly.next(b) != c) std::swap(b, c);
  if (poly.next(b) != c) throw std::invalid_argument("base endpoints are not consecutive on the hole");
  if (poly.locate(apex).ring == lb.ring) throw std::invalid_argument("apex lies on the base hole");
  return check_candidate(poly, apex, b, c);
}

bool is_special(const PolygonWithHoles& poly, VertexId apex, VertexId b, VertexId c) {
  const CutPolygon lifted = lift(poly);
  return is_special(lifted, entry_id(poly.dense_index(apex)), entry_id(poly.dense_index(b)),
                    entry_id(poly.dense_index(c)));
}

SpecialTriangle find_special_triangle(const CutPolygon& poly) {
  if (poly.hole_count() == 0) throw std::invalid_argument("special triangle search needs at least one hole");
  std::optional<SpecialTriangle> found;
  scan(poly, [&](const SpecialTriangle& t) {
    found = t;
    return false;
  });
  if (!found) throw NoSpecialTriangleFound("no special triangle found", describe(poly));
  return *found;
}

std::vector<SpecialTriangle> enumerate_special_triangles(const CutPolygon& poly) {
  std::vector<SpecialTriangle> all;
  scan(poly, [&](const SpecialTriangle& t) {
    all.push_back(t);
    return true;
  });
  return all;
}

}  // namespace vguard
