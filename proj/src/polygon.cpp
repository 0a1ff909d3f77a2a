#include "vguard/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vguard {

namespace {

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  return segments_properly_cross(a, b, c, d) || on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) ||
         on_segment(d, a, b);
}

// Reverses orientation while keeping vertex 0 in place.
void reverse_keep_first(Ring& ring) { std::reverse(ring.begin() + 1, ring.end()); }

std::string ring_name(std::size_t ring) { return ring == 0 ? "outer ring" : "hole " + std::to_string(ring); }

}  // namespace

std::string to_string(const VertexId& id) {
  return "(" + std::to_string(id.ring) + ", " + std::to_string(id.index) + ")";
}

const char* to_string(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::TooFewVertices: return "TooFewVertices";
    case ValidationErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ValidationErrorKind::CollinearVertices: return "CollinearVertices";
    case ValidationErrorKind::SelfIntersectingRing: return "SelfIntersectingRing";
    case ValidationErrorKind::HoleOutsideOuter: return "HoleOutsideOuter";
    case ValidationErrorKind::RingsIntersect: return "RingsIntersect";
  }
  return "?";
}

ValidationError::ValidationError(ValidationErrorKind kind, std::size_t ring, std::optional<std::size_t> vertex,
                                 const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + ring_name(ring) +
                         (vertex ? ", vertex " + std::to_string(*vertex) : std::string()) + ": " + detail),
      kind_(kind),
      ring_(ring),
      vertex_(vertex) {}

PolygonWithHoles::PolygonWithHoles(std::vector<Ring> rings) : rings_(std::move(rings)) {
  offsets_.reserve(rings_.size() + 1);
  offsets_.push_back(0);
  for (const Ring& r : rings_) offsets_.push_back(offsets_.back() + r.size());
}

VertexId PolygonWithHoles::vertex_at(std::size_t dense) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), dense);
  const std::size_t ring = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  return {ring, dense - offsets_[ring]};
}

std::vector<VertexId> PolygonWithHoles::vertices() const {
  std::vector<VertexId> ids;
  ids.reserve(vertex_count());
  for (std::size_t r = 0; r < rings_.size(); ++r)
    for (std::size_t i = 0; i < rings_[r].size(); ++i) ids.push_back({r, i});
  return ids;
}

PolygonWithHoles validate(std::vector<Ring> rings) {
  using K = ValidationErrorKind;
  if (rings.empty()) throw ValidationError(K::TooFewVertices, 0, std::nullopt, "no outer ring given");

  for (std::size_t r = 0; r < rings.size(); ++r) {
    const Ring& ring = rings[r];
    const std::size_t n = ring.size();
    if (n < 3) throw ValidationError(K::TooFewVertices, r, std::nullopt, "ring has " + std::to_string(n) + " vertices");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (ring[i] == ring[j])
          throw ValidationError(K::DuplicatePoint, r, j, to_string(ring[j]) + " repeats vertex " + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      if (orient(ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]) == Orientation::Collinear)
        throw ValidationError(K::CollinearVertices, r, i, to_string(ring[i]) + " is collinear with its neighbours");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
        if (segments_touch(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]))
          throw ValidationError(K::SelfIntersectingRing, r, i,
                                "edge " + std::to_string(i) + " meets edge " + std::to_string(j));
      }
  }

  for (std::size_t r = 0; r < rings.size(); ++r)
    for (std::size_t s = r + 1; s < rings.size(); ++s) {
      const Ring& a = rings[r];
      const Ring& b = rings[s];
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
          if (segments_touch(a[i], a[(i + 1) % a.size()], b[j], b[(j + 1) % b.size()]))
            throw ValidationError(K::RingsIntersect, s, j,
                                  "edge " + std::to_string(j) + " meets edge " + std::to_string(i) + " of " + ring_name(r));
    }

  for (std::size_t r = 1; r < rings.size(); ++r) {
    const Ring& outer = rings[0];
    if (classify_point(std::span<const Ring>(&outer, 1), rings[r][0]) != RegionPosition::Inside)
      throw ValidationError(K::HoleOutsideOuter, r, 0, "hole is not inside the outer ring");
    for (std::size_t s = 1; s < rings.size(); ++s) {
      if (s == r) continue;
      if (classify_point(std::span<const Ring>(&rings[s], 1), rings[r][0]) == RegionPosition::Inside)
        throw ValidationError(K::HoleOutsideOuter, r, 0, "hole lies inside hole " + std::to_string(s));
    }
  }

  if (twice_signed_area(rings[0]) < 0) reverse_keep_first(rings[0]);
  for (std::size_t r = 1; r < rings.size(); ++r)
    if (twice_signed_area(rings[r]) > 0) reverse_keep_first(rings[r]);

  return PolygonWithHoles(std::move(rings));
}

RegionPosition point_in_region(const PolygonWithHoles& poly, const Point& p) { return classify_point(poly.rings(), p); }

bool segment_in_region(const PolygonWithHoles& poly, const Point& p, const Point& q) {
  return segment_in_rings(poly.rings(), p, q);
}

Scalar region_area(const PolygonWithHoles& poly) {
  Scalar twice = 0;
  for (const Ring& r : poly.rings()) twice += twice_signed_area(r);
  return twice / 2;
}

bool vertices_see(const PolygonWithHoles& poly, VertexId u, VertexId v) {
  return segment_in_region(poly, poly.point(u), poly.point(v));
}

VisibilityGraph::VisibilityGraph(std::vector<VertexId> ids, std::vector<std::uint8_t> adjacency)
    : ids_(std::move(ids)), adjacency_(std::move(adjacency)) {}

std::size_t VisibilityGraph::index_of(VertexId id) const {
  const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) throw std::out_of_range("vertex " + to_string(id) + " is not in the graph");
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<std::size_t> VisibilityGraph::neighbors(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size(); ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::size_t VisibilityGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adjacency_.begin(), adjacency_.end(), std::uint8_t{1})) / 2;
}

VisibilityGraph visibility_graph(const PolygonWithHoles& poly) {
  const std::size_t n = poly.vertex_count();
  std::vector<VertexId> ids = poly.vertices();
  std::vector<std::uint8_t> adjacency(n * n, 0);
  const std::int64_t pairs = static_cast<std::int64_t>(n * n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t k = 0; k < pairs; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / n;
    const std::size_t j = static_cast<std::size_t>(k) % n;
    if (i < j && vertices_see(poly, ids[i], ids[j])) {
      adjacency[i * n + j] = 1;
      adjacency[j * n + i] = 1;
    }
  }
  return VisibilityGraph(std::move(ids), std::move(adjacency));
}

VisibilityGraph visibility_graph_serial(const PolygonWithHoles& poly) {
  const std::size_t n = poly.vertex_count();
  std::vector<VertexId> ids = poly.vertices();
  std::vector<std::uint8_t> adjacency(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (vertices_see(poly, ids[i], ids[j])) adjacency[i * n + j] = adjacency[j * n + i] = 1;
  return VisibilityGraph(std::move(ids), std::move(adjacency));
}

DominationCheck is_dominating(const VisibilityGraph& graph, std::span<const VertexId> guards) {
  std::vector<bool> is_guard(graph.size(), false);
  for (const VertexId& g : guards) is_guard[graph.index_of(g)] = true;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (is_guard[v]) continue;
    bool seen = false;
    for (std::size_t u = 0; u < graph.size() && !seen; ++u) seen = is_guard[u] && graph.adjacent(u, v);
    if (!seen) return {false, graph.vertex(v)};
  }
  return {true, std::nullopt};
}

}  // namespace vguard
