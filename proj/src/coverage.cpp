#include "vguard/verification.hpp"

#include <algorithm>
#include <cstdint>

namespace vguard {

namespace {

bool sees_point(const PolygonWithHoles& poly, const Point& g, const Point& p) {
  return g == p || segment_in_region(poly, g, p);
}

std::vector<Interval> merge(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (Interval& iv : parts) {
    if (!out.empty() && iv.lo <= out.back().hi) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

EdgeCoverage cover_edge(const PolygonWithHoles& poly, std::span<const VertexId> guards, VertexId from) {
  const VertexId to = poly.next(from);
  std::vector<Interval> parts;
  for (const VertexId& g : guards) {
    auto visible = visible_interval_set(poly, g, from, to);
    parts.insert(parts.end(), visible.begin(), visible.end());
  }
  return {from, to, merge(std::move(parts))};
}

std::vector<GapPiece> edge_gaps(const EdgeCoverage& cov, std::size_t edge) {
  std::vector<GapPiece> out;
  if (cov.covered.empty()) return {GapPiece{edge, Scalar(0), Scalar(1), true, true}};
  if (cov.covered.front().lo > 0) out.push_back({edge, Scalar(0), cov.covered.front().lo, true, false});
  for (std::size_t i = 1; i < cov.covered.size(); ++i)
    out.push_back({edge, cov.covered[i - 1].hi, cov.covered[i].lo, false, false});
  if (cov.covered.back().hi < 1) out.push_back({edge, cov.covered.back().hi, Scalar(1), false, true});
  return out;
}

// Chains the per-edge gaps of one ring (edges [first, first + count)) into
// maximal gaps. A piece ending at an uncovered vertex continues on the next edge.
void collect_ring_gaps(const PolygonWithHoles& poly, CoverageReport& report, std::size_t first, std::size_t count) {
  std::vector<GapPiece> pieces;
  for (std::size_t i = 0; i < count; ++i) {
    auto gaps = edge_gaps(report.edges[first + i], first + i);
    pieces.insert(pieces.end(), gaps.begin(), gaps.end());
  }
  if (pieces.empty()) return;

  auto endpoint = [&](const GapPiece& p, bool at_hi) {
    const EdgeCoverage& e = report.edges[p.edge];
    return lerp(poly.point(e.from), poly.point(e.to), at_hi ? p.hi : p.lo);
  };
  auto close = [&](std::vector<GapPiece>& open) {
    Point a = endpoint(open.front(), false);
    Point b = endpoint(open.back(), true);
    report.gaps.push_back({std::move(open), std::move(a), std::move(b)});
    open.clear();
  };

  // Start at a piece that does not continue an earlier one. Without one, the
  // whole ring is uncovered and forms a single closed gap.
  const auto begin = std::find_if(pieces.begin(), pieces.end(), [](const GapPiece& p) { return !p.includes_start; });
  if (begin == pieces.end()) {
    std::vector<GapPiece> all = pieces;
    close(all);
    return;
  }
  std::rotate(pieces.begin(), begin, pieces.end());
  std::vector<GapPiece> open;
  for (GapPiece& p : pieces) {
    const bool continues = p.includes_end;
    open.push_back(std::move(p));
    if (!continues) close(open);
  }
  if (!open.empty()) close(open);
}

CoverageReport coverage_of_rings(const PolygonWithHoles& poly, std::span<const VertexId> guards, std::size_t ring_lo,
                                 std::size_t ring_hi, bool parallel) {
  std::vector<VertexId> edge_starts;
  for (std::size_t r = ring_lo; r < ring_hi; ++r)
    for (std::size_t i = 0; i < poly.rings()[r].size(); ++i) edge_starts.push_back({r, i});

  CoverageReport report;
  report.edges.resize(edge_starts.size());
  const std::int64_t count = static_cast<std::int64_t>(edge_starts.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k)
      report.edges[static_cast<std::size_t>(k)] = cover_edge(poly, guards, edge_starts[static_cast<std::size_t>(k)]);
  } else {
    for (std::int64_t k = 0; k < count; ++k)
      report.edges[static_cast<std::size_t>(k)] = cover_edge(poly, guards, edge_starts[static_cast<std::size_t>(k)]);
  }

  std::size_t first = 0;
  for (std::size_t r = ring_lo; r < ring_hi; ++r) {
    collect_ring_gaps(poly, report, first, poly.rings()[r].size());
    first += poly.rings()[r].size();
  }
  return report;
}

}  // namespace

std::vector<Interval> visible_interval_set(const PolygonWithHoles& poly, VertexId g, VertexId from, VertexId to) {
  const Point& gp = poly.point(g);
  const Point& u = poly.point(from);
  const Point& v = poly.point(to);
  if (gp == u || gp == v) return {Interval{Scalar(0), Scalar(1)}};

  std::vector<Scalar> breaks{Scalar(0), Scalar(1)};
  const int side = orient_sign(gp, u, v);
  if (side != 0) {
    const Point& a = side > 0 ? u : v;
    const Point& b = side > 0 ? v : u;
    for (const Ring& ring : poly.rings())
      for (const Point& w : ring) {
        if (w == gp || !in_closed_triangle(gp, a, b, w)) continue;
        // t with orient(g, w, u + t (v - u)) = 0
        const Scalar wx = w.x - gp.x, wy = w.y - gp.y;
        const Scalar denom = wx * (v.y - u.y) - wy * (v.x - u.x);
        if (denom == 0) continue;
        const Scalar t = -(wx * (u.y - gp.y) - wy * (u.x - gp.x)) / denom;
        if (t > 0 && t < 1) breaks.push_back(t);
      }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  }

  // Decide each breakpoint and each open gap.
  std::vector<Interval> out;
  auto add = [&](const Scalar& lo, const Scalar& hi) {
    if (!out.empty() && out.back().hi == lo) {
      out.back().hi = hi;
    } else {
      out.push_back({lo, hi});
    }
  };
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (sees_point(poly, gp, lerp(u, v, breaks[i]))) add(breaks[i], breaks[i]);
    if (i + 1 < breaks.size()) {
      const Scalar mid = (breaks[i] + breaks[i + 1]) / 2;
      if (sees_point(poly, gp, lerp(u, v, mid))) add(breaks[i], breaks[i + 1]);
    }
  }
  return out;
}

CoverageReport boundary_coverage(const PolygonWithHoles& poly, std::span<const VertexId> guards) {
  return coverage_of_rings(poly, guards, 0, 1, true);
}

CoverageReport boundary_coverage_serial(const PolygonWithHoles& poly, std::span<const VertexId> guards) {
  return coverage_of_rings(poly, guards, 0, 1, false);
}

HoleCoverageCheck hole_coverage(const PolygonWithHoles& poly, std::span<const VertexId> guards,
                                std::span<const std::array<VertexId, 2>> bases) {
  HoleCoverageCheck check;
  check.hole_count = poly.hole_count();
  check.report = coverage_of_rings(poly, guards, 1, poly.rings().size(), true);
  check.within_count = check.report.gaps.size() <= check.hole_count;
  for (const Gap& gap : check.report.gaps) {
    bool inside = false;
    if (gap.pieces.size() == 1) {
      const EdgeCoverage& e = check.report.edges[gap.pieces.front().edge];
      inside = std::any_of(bases.begin(), bases.end(), [&](const std::array<VertexId, 2>& b) {
        return (b[0] == e.from && b[1] == e.to) || (b[0] == e.to && b[1] == e.from);
      });
    }
    check.within_bases = check.within_bases && inside;
  }
  return check;
}

}  // namespace vguard

namespace vguard {

GuardSetVerdict verify_guard_set(const PolygonWithHoles& poly, std::span<const VertexId> guards,
                                 std::optional<std::span<const std::array<VertexId, 2>>> bases) {
  GuardSetVerdict verdict;
  verdict.count = guards.size();
  verdict.bound = (poly.vertex_count() + poly.hole_count()) / 3;
  verdict.domination = is_dominating(visibility_graph(poly), guards);
  verdict.outer = boundary_coverage(poly, guards);
  if (bases) verdict.holes = hole_coverage(poly, guards, *bases);
  return verdict;
}

}  // namespace vguard
