#include "vguard/fisk.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "vguard/errors.hpp"

namespace vguard {

namespace {

std::array<EntryId, 2> edge_key(EntryId a, EntryId b) { return a < b ? std::array{a, b} : std::array{b, a}; }

std::string remaining_state(const CutPolygon& poly, const std::vector<EntryId>& remaining) {
  std::string s = describe(poly) + "remaining walk:";
  for (const EntryId e : remaining) s += " #" + std::to_string(index(e)) + to_string(poly.point(e));
  return s + "\n";
}

}  // namespace

std::size_t Triangulation::dual_edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::array<EntryId, 2>> Triangulation::diagonals() const {
  std::map<std::array<EntryId, 2>, int> uses;
  for (const auto& tri : triangles)
    for (std::size_t k = 0; k < 3; ++k) ++uses[edge_key(tri[k], tri[(k + 1) % 3])];
  std::vector<std::array<EntryId, 2>> out;
  for (const auto& [key, count] : uses)
    if (count == 2) out.push_back(key);
  return out;
}

Triangulation triangulate(const CutPolygon& poly) {
  if (poly.hole_count() != 0) throw std::invalid_argument("triangulate needs a polygon without holes");
  const auto& entries = poly.entries();
  auto pt = [&](EntryId e) -> const Point& { return entries[index(e)].point; };

  Triangulation result;
  result.entry_count = poly.entry_count();
  std::vector<EntryId> ring = poly.rings()[0];

  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t i = 0; i < m && !clipped; ++i) {
      const EntryId prev = ring[(i + m - 1) % m];
      const EntryId cur = ring[i];
      const EntryId next = ring[(i + 1) % m];
      if (orient(pt(prev), pt(cur), pt(next)) != Orientation::CounterClockwise) continue;
      const EntryId before = ring[(i + m - 2) % m];
      const EntryId after = ring[(i + 2) % m];
      if (!in_closed_wedge(pt(prev), pt(cur), pt(before), pt(next))) continue;
      if (!in_closed_wedge(pt(next), pt(after), pt(cur), pt(prev))) continue;
      const std::array<std::array<EntryId, 2>, 2> own{{{prev, cur}, {cur, next}}};
      if (!triangle_is_clear(std::span(&ring, 1), entries, {prev, cur, next}, own)) continue;
      result.triangles.push_back({prev, cur, next});
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
    }
    if (!clipped) throw TriangulationFailed("no ear found", remaining_state(poly, ring));
  }
  if (orient(pt(ring[0]), pt(ring[1]), pt(ring[2])) != Orientation::CounterClockwise)
    throw TriangulationFailed("final triangle is degenerate", remaining_state(poly, ring));
  result.triangles.push_back({ring[0], ring[1], ring[2]});

  std::map<std::array<EntryId, 2>, std::vector<std::size_t>> sharing;
  for (std::size_t t = 0; t < result.triangles.size(); ++t)
    for (std::size_t k = 0; k < 3; ++k)
      sharing[edge_key(result.triangles[t][k], result.triangles[t][(k + 1) % 3])].push_back(t);
  result.adjacency.assign(result.triangles.size(), {});
  for (const auto& [key, tris] : sharing) {
    if (tris.size() > 2) throw TriangulationFailed("edge shared by more than two triangles", describe(poly));
    if (tris.size() == 2) {
      result.adjacency[tris[0]].push_back(tris[1]);
      result.adjacency[tris[1]].push_back(tris[0]);
    }
  }
  return result;
}

std::array<std::size_t, 3> ThreeColoring::class_sizes() const {
  std::array<std::size_t, 3> sizes{0, 0, 0};
  for (const int c : color)
    if (c >= 0) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

ThreeColoring three_color(const Triangulation& t) {
  const std::size_t count = t.triangles.size();
  if (count == 0 || t.dual_edge_count() != count - 1) throw DualNotTree("dual graph edge count is not t - 1", "");

  std::size_t root = 0;
  EntryId lowest = t.triangles[0][0];
  for (std::size_t i = 0; i < count; ++i)
    for (const EntryId e : t.triangles[i])
      if (e < lowest) {
        lowest = e;
        root = i;
      }

  ThreeColoring coloring;
  coloring.color.assign(t.entry_count, -1);
  auto set = [&](EntryId e, int c) {
    int& slot = coloring.color.at(index(e));
    if (slot != -1 && slot != c) throw DualNotTree("colour propagation conflict", "");
    slot = c;
  };
  for (int k = 0; k < 3; ++k) set(t.triangles[root][static_cast<std::size_t>(k)], k);

  std::vector<bool> seen(count, false);
  std::queue<std::size_t> queue;
  queue.push(root);
  seen[root] = true;
  std::size_t visited = 0;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop();
    ++visited;
    for (const std::size_t nb : t.adjacency[cur]) {
      if (seen[nb]) continue;
      seen[nb] = true;
      const auto& tri = t.triangles[nb];
      int used = 0;
      int colored = 0;
      for (const EntryId e : tri)
        if (const int c = coloring.color[index(e)]; c >= 0) {
          used += c;
          ++colored;
        }
      if (colored < 2) throw DualNotTree("neighbour shares no diagonal", "");
      for (const EntryId e : tri)
        if (coloring.color[index(e)] < 0) set(e, 3 - used);
      queue.push(nb);
    }
  }
  if (visited != count) throw DualNotTree("dual graph is disconnected", "");
  for (const auto& tri : t.triangles) {
    const int sum = coloring.of(tri[0]) + coloring.of(tri[1]) + coloring.of(tri[2]);
    if (sum != 3 || coloring.of(tri[0]) == coloring.of(tri[1])) throw DualNotTree("triangle is not rainbow", "");
  }
  return coloring;
}

GuardSelection select_guards(const ThreeColoring& coloring) {
  const auto sizes = coloring.class_sizes();
  GuardSelection sel;
  sel.color = static_cast<int>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
  for (std::size_t e = 0; e < coloring.color.size(); ++e)
    if (coloring.color[e] == sel.color) sel.guards.push_back(entry_id(e));
  return sel;
}

}  // namespace vguard
