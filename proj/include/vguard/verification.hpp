#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "vguard/geometry.hpp"
#include "vguard/polygon.hpp"

namespace vguard {

/// Closed parameter interval [lo, hi] along an edge; lo == hi is a single point.
struct Interval {
  Scalar lo;
  Scalar hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Exactly { t in [0,1] : the segment from guard g to edge(t) lies in the
/// closed region }, as sorted maximal closed intervals. `from`, `to` must be
/// consecutive on a ring.
///
/// The visible set can only change where the moving segment sweeps across a
/// polygon vertex, so the breakpoints are the projections through g of every
/// vertex inside the closed triangle (g, from, to). Each breakpoint and each
/// open gap between breakpoints is then decided with one exact segment test.
std::vector<Interval> visible_interval_set(const PolygonWithHoles& poly, VertexId g, VertexId from, VertexId to);

struct EdgeCoverage {
  VertexId from;
  VertexId to;
  std::vector<Interval> covered;  // merged union over all guards
};

/// Part of an uncovered stretch lying on one edge: the open interval (lo, hi),
/// plus its endpoints when they are the edge's own (uncovered) vertices.
struct GapPiece {
  std::size_t edge;  // index into CoverageReport::edges
  Scalar lo;
  Scalar hi;
  bool includes_start = false;  // lo == 0 and the start vertex is uncovered
  bool includes_end = false;    // hi == 1 and the end vertex is uncovered
};

/// A maximal connected uncovered part of a ring; may run across vertices.
struct Gap {
  std::vector<GapPiece> pieces;
  Point start;
  Point end;
};

struct CoverageReport {
  std::vector<EdgeCoverage> edges;
  std::vector<Gap> gaps;

  bool covered() const noexcept { return gaps.empty(); }
};

/// Coverage of the outer ring by the guard set.
CoverageReport boundary_coverage(const PolygonWithHoles& poly, std::span<const VertexId> guards);
CoverageReport boundary_coverage_serial(const PolygonWithHoles& poly, std::span<const VertexId> guards);

struct HoleCoverageCheck {
  CoverageReport report;
  std::size_t hole_count = 0;
  bool within_count = true;  // number of maximal gaps <= h
  bool within_bases = true;  // every gap lies inside one recorded base edge

  bool ok() const noexcept { return within_count && within_bases; }
};

/// Coverage of all hole rings, checked against the recorded base edges.
HoleCoverageCheck hole_coverage(const PolygonWithHoles& poly, std::span<const VertexId> guards,
                                std::span<const std::array<VertexId, 2>> bases);

class OracleTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

constexpr std::size_t kOracleMaxVertices = 20;

/// Minimum dominating set by increasing-size search over vertex combinations in
/// lexicographic order, pruned whenever the lowest undominated vertex has no
/// closed neighbour left to pick. Returns the lexicographically first optimum.
/// Throws OracleTooLarge above min(size_limit, kOracleMaxVertices) vertices.
std::vector<VertexId> min_dominating_oracle(const VisibilityGraph& graph, std::size_t size_limit = kOracleMaxVertices);

}  // namespace vguard

namespace vguard {

/// Everything a guard set must satisfy on the original polygon.
struct GuardSetVerdict {
  std::size_t count = 0;
  std::size_t bound = 0;
  DominationCheck domination;
  CoverageReport outer;
  std::optional<HoleCoverageCheck> holes;  // present when base edges are known

  bool within_bound() const noexcept { return count <= bound; }
  bool ok() const noexcept {
    return within_bound() && domination.dominating && outer.covered() && (!holes || holes->ok());
  }
};

GuardSetVerdict verify_guard_set(const PolygonWithHoles& poly, std::span<const VertexId> guards,
                                 std::optional<std::span<const std::array<VertexId, 2>>> bases = std::nullopt);

}  // namespace vguard
