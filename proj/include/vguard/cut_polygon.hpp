#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vguard/geometry.hpp"
#include "vguard/polygon.hpp"

namespace vguard {

/// Identifies one occurrence of a vertex on the working polygon. After apex
/// splits one original vertex may own several entries at the same coordinate.
enum class EntryId : std::uint32_t {};

inline std::size_t index(EntryId e) { return static_cast<std::size_t>(e); }
inline EntryId entry_id(std::size_t i) { return static_cast<EntryId>(i); }

struct Entry {
  VertexId origin;
  Point point;
};

/// A chord introduced by a split: runs from an apex copy to a base endpoint.
struct Slit {
  EntryId apex_copy;
  EntryId end;
};

struct EntryLocation {
  std::size_t ring;
  std::size_t position;
};

/// Working polygon of the hole-elimination induction: one outer walk plus the
/// remaining hole walks, each a closed sequence of entries with the region on
/// the left. Walks are weakly simple: coordinates repeat only at pinches.
class CutPolygon {
 public:
  CutPolygon(std::vector<Entry> entries, std::vector<std::vector<EntryId>> rings, std::vector<Slit> slits,
             std::vector<std::array<EntryId, 3>> removed);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const Entry& entry(EntryId e) const { return entries_.at(index(e)); }
  const Point& point(EntryId e) const { return entries_.at(index(e)).point; }
  VertexId origin(EntryId e) const { return entries_.at(index(e)).origin; }

  const std::vector<std::vector<EntryId>>& rings() const noexcept { return rings_; }
  /// Coordinates of each walk, aligned with rings().
  std::span<const Ring> ring_points() const noexcept { return ring_points_; }

  std::size_t hole_count() const noexcept { return rings_.size() - 1; }
  std::size_t entry_count() const noexcept { return entries_.size(); }

  const std::vector<Slit>& slits() const noexcept { return slits_; }
  /// Coordinates visited more than once by the walks.
  const std::vector<Point>& pinches() const noexcept { return pinches_; }
  /// Special triangles cut away so far, as (apex copy, base end, base end).
  const std::vector<std::array<EntryId, 3>>& removed_triangles() const noexcept { return removed_; }

  EntryLocation locate(EntryId e) const { return locations_.at(index(e)); }
  EntryId next(EntryId e) const;
  EntryId prev(EntryId e) const;

  /// Many-to-one map from entries to original vertices.
  std::vector<VertexId> provenance() const;

  RegionPosition classify(const Point& p) const { return classify_point(ring_points_, p); }

 private:
  std::vector<Entry> entries_;
  std::vector<std::vector<EntryId>> rings_;
  std::vector<Ring> ring_points_;
  std::vector<Slit> slits_;
  std::vector<std::array<EntryId, 3>> removed_;
  std::vector<Point> pinches_;
  std::vector<EntryLocation> locations_;
};

/// Wraps a validated polygon with identity provenance; entry i is the i-th
/// vertex in dense (ring, index) order.
CutPolygon lift(const PolygonWithHoles& poly);

/// Visibility between two entries of the working polygon. The segment must lie
/// in the closed region bounded by the walks, may not pass through a pinch
/// except at its own endpoints, and must leave each endpoint through that
/// entry's own wedge. Copies of the same coordinate never see each other.
bool cut_sees(const CutPolygon& poly, EntryId u, EntryId v);

/// Whether the ray from entry e towards `target` lies in e's closed wedge.
bool in_entry_wedge(const CutPolygon& poly, EntryId e, const Point& target);

/// True iff the counter-clockwise triangle `corners` is free of boundary: no
/// other entry in the closed triangle, no walk edge crossing a side or entering
/// the open interior through a corner, and no walk edge running along a side
/// unless it is one of `own_edges` (given as ordered entry pairs).
bool triangle_is_clear(std::span<const std::vector<EntryId>> rings, const std::vector<Entry>& entries,
                       const std::array<EntryId, 3>& corners, std::span<const std::array<EntryId, 2>> own_edges);

/// Images of cut-polygon guards on the original polygon; copies merge.
std::vector<VertexId> map_guards_back(std::span<const VertexId> provenance, std::span<const EntryId> guards);

/// Exact textual dump of the walks, slits and pinches (for failure reports).
std::string describe(const CutPolygon& poly);

}  // namespace vguard
