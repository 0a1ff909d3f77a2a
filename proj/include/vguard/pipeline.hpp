#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "vguard/cut_polygon.hpp"
#include "vguard/fisk.hpp"
#include "vguard/polygon.hpp"
#include "vguard/special_triangle.hpp"

namespace vguard {

/// floor((n + h) / 3)
constexpr std::size_t guard_bound(std::size_t n, std::size_t h) { return (n + h) / 3; }

struct CutRecord {
  SpecialTriangle triangle;  // entries of the working polygon the cut was made on
  VertexId apex;             // original vertices behind the triangle's corners
  VertexId b;
  VertexId c;
  std::size_t holes_after = 0;
  std::size_t entries_after = 0;
};

struct Certificate {
  std::vector<CutRecord> cuts;
  CutPolygon final_polygon;
  Triangulation triangulation;
  ThreeColoring coloring;
  GuardSelection selection;
};

struct GuardResult {
  std::vector<VertexId> guards;  // sorted, on the original polygon
  std::size_t bound = 0;
  Certificate certificate;
};

using SpecialTriangleSearch = std::function<SpecialTriangle(const CutPolygon&)>;

struct PipelineOptions {
  SpecialTriangleSearch search = find_special_triangle;
};

/// Eliminates every hole by apex splits, 3-colours an ear-clipping
/// triangulation of the resulting polygon and maps the smallest colour class
/// back to original vertices. Internal failures propagate as InternalFailure.
GuardResult place_guards(const PolygonWithHoles& poly, const PipelineOptions& options = {});

/// Re-applies the recorded cuts and colouring; returns the guard set they imply.
std::vector<VertexId> replay(const PolygonWithHoles& poly, const Certificate& certificate);

/// Human-readable trace of a run.
std::string explain(const GuardResult& result);

}  // namespace vguard
