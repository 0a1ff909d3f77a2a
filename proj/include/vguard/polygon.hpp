#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vguard/geometry.hpp"

namespace vguard {

/// Ring 0 is the outer boundary, ring k >= 1 is hole k.
struct VertexId {
  std::size_t ring = 0;
  std::size_t index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string to_string(const VertexId& id);

enum class ValidationErrorKind {
  TooFewVertices,
  DuplicatePoint,
  CollinearVertices,
  SelfIntersectingRing,
  HoleOutsideOuter,
  RingsIntersect,
};

const char* to_string(ValidationErrorKind kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, std::size_t ring, std::optional<std::size_t> vertex, const std::string& detail);

  ValidationErrorKind kind() const noexcept { return kind_; }
  std::size_t ring() const noexcept { return ring_; }
  std::optional<std::size_t> vertex() const noexcept { return vertex_; }

 private:
  ValidationErrorKind kind_;
  std::size_t ring_;
  std::optional<std::size_t> vertex_;
};

/// A validated polygon with holes in canonical orientation: outer ring
/// counter-clockwise, every hole clockwise, so the region is always on the
/// left of each directed edge.
class PolygonWithHoles {
 public:
  const std::vector<Ring>& rings() const noexcept { return rings_; }
  const Ring& outer() const noexcept { return rings_.front(); }
  std::span<const Ring> holes() const noexcept { return std::span<const Ring>(rings_).subspan(1); }

  /// n: total vertex count over all rings.
  std::size_t vertex_count() const noexcept { return offsets_.back(); }
  /// h: number of holes.
  std::size_t hole_count() const noexcept { return rings_.size() - 1; }

  const Point& point(VertexId id) const { return rings_.at(id.ring).at(id.index); }
  std::size_t dense_index(VertexId id) const { return offsets_.at(id.ring) + id.index; }
  VertexId vertex_at(std::size_t dense) const;
  std::vector<VertexId> vertices() const;

  /// Successor along the ring in canonical orientation.
  VertexId next(VertexId id) const { return {id.ring, (id.index + 1) % rings_[id.ring].size()}; }

  friend PolygonWithHoles validate(std::vector<Ring> rings);

 private:
  explicit PolygonWithHoles(std::vector<Ring> rings);

  std::vector<Ring> rings_;
  std::vector<std::size_t> offsets_;
};

/// Validates raw rings (outer first) and normalizes their orientation.
/// Throws ValidationError naming the offending ring and vertex.
PolygonWithHoles validate(std::vector<Ring> rings);

RegionPosition point_in_region(const PolygonWithHoles& poly, const Point& p);
bool segment_in_region(const PolygonWithHoles& poly, const Point& p, const Point& q);

/// Area of the region: area(outer) - sum of hole areas.
Scalar region_area(const PolygonWithHoles& poly);

bool vertices_see(const PolygonWithHoles& poly, VertexId u, VertexId v);

class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  VisibilityGraph(std::vector<VertexId> ids, std::vector<std::uint8_t> adjacency);

  std::size_t size() const noexcept { return ids_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i * ids_.size() + j] != 0; }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  VertexId vertex(std::size_t i) const { return ids_.at(i); }
  std::size_t index_of(VertexId id) const;
  std::vector<std::size_t> neighbors(std::size_t i) const;
  std::size_t edge_count() const;

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::uint8_t> adjacency_;
};

/// All-pairs visibility, parallelized over vertex pairs with OpenMP.
VisibilityGraph visibility_graph(const PolygonWithHoles& poly);
/// Single-threaded reference; must produce an identical graph.
VisibilityGraph visibility_graph_serial(const PolygonWithHoles& poly);

struct DominationCheck {
  bool dominating = false;
  std::optional<VertexId> witness;  // an undominated vertex when !dominating
};

DominationCheck is_dominating(const VisibilityGraph& graph, std::span<const VertexId> guards);

}  // namespace vguard
