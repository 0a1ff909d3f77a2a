#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "vguard/cut_polygon.hpp"

namespace vguard {

struct Triangulation {
  std::size_t entry_count = 0;
  /// Counter-clockwise entry triples, in clipping order.
  std::vector<std::array<EntryId, 3>> triangles;
  /// Dual graph: triangles sharing a diagonal.
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t dual_edge_count() const;
  /// Entry pairs shared by two triangles.
  std::vector<std::array<EntryId, 2>> diagonals() const;
};

/// Ear clipping on a hole-free (weakly simple) working polygon. Ears are taken
/// lowest ring position first; each ear must be strictly convex, leave both
/// diagonal endpoints through their own wedge, and be clear of boundary.
/// Throws std::invalid_argument if holes remain, TriangulationFailed when stuck.
Triangulation triangulate(const CutPolygon& poly);

struct ThreeColoring {
  /// Colour per entry id (0, 1, 2), or -1 for entries absent from the triangulation.
  std::vector<int> color;

  int of(EntryId e) const { return color.at(index(e)); }
  std::array<std::size_t, 3> class_sizes() const;
};

/// Roots the dual tree at the triangle holding the lowest entry, colours its
/// corners 0, 1, 2 and propagates the forced colour across every diagonal.
/// Throws DualNotTree if the dual graph is not a tree.
ThreeColoring three_color(const Triangulation& t);

struct GuardSelection {
  int color = 0;
  std::vector<EntryId> guards;
};

/// Smallest colour class, ties to the lower colour.
GuardSelection select_guards(const ThreeColoring& coloring);

}  // namespace vguard
