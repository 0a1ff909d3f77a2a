#include "vguard/cut_polygon.hpp"

#include <algorithm>
#include <sstream>

namespace vguard {

namespace {

// Parameter of a collinear point x along segment ab.
Scalar along(const Point& a, const Point& b, const Point& x) {
  if (a.x != b.x) return (x.x - a.x) / (b.x - a.x);
  return (x.y - a.y) / (b.y - a.y);
}

bool overlaps_side(const Point& s, const Point& t, const Point& a, const Point& b) {
  if (orient(a, b, s) != Orientation::Collinear || orient(a, b, t) != Orientation::Collinear) return false;
  Scalar ps = along(a, b, s);
  Scalar pt = along(a, b, t);
  if (pt < ps) std::swap(ps, pt);
  const Scalar lo = ps < 0 ? Scalar(0) : ps;
  const Scalar hi = pt > 1 ? Scalar(1) : pt;
  return lo < hi;
}

}  // namespace

CutPolygon::CutPolygon(std::vector<Entry> entries, std::vector<std::vector<EntryId>> rings, std::vector<Slit> slits,
                       std::vector<std::array<EntryId, 3>> removed)
    : entries_(std::move(entries)), rings_(std::move(rings)), slits_(std::move(slits)), removed_(std::move(removed)) {
  locations_.assign(entries_.size(), EntryLocation{0, 0});
  ring_points_.reserve(rings_.size());
  std::vector<Point> all;
  for (std::size_t r = 0; r < rings_.size(); ++r) {
    Ring pts;
    pts.reserve(rings_[r].size());
    for (std::size_t i = 0; i < rings_[r].size(); ++i) {
      const EntryId e = rings_[r][i];
      locations_.at(index(e)) = {r, i};
      pts.push_back(entries_.at(index(e)).point);
    }
    all.insert(all.end(), pts.begin(), pts.end());
    ring_points_.push_back(std::move(pts));
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i] == all[i - 1] && (pinches_.empty() || !(pinches_.back() == all[i]))) pinches_.push_back(all[i]);
}

EntryId CutPolygon::next(EntryId e) const {
  const EntryLocation loc = locate(e);
  const auto& ring = rings_[loc.ring];
  return ring[(loc.position + 1) % ring.size()];
}

EntryId CutPolygon::prev(EntryId e) const {
  const EntryLocation loc = locate(e);
  const auto& ring = rings_[loc.ring];
  return ring[(loc.position + ring.size() - 1) % ring.size()];
}

std::vector<VertexId> CutPolygon::provenance() const {
  std::vector<VertexId> out;
  out.reserve(entries_.size());
  for (const Entry& e : entries_) out.push_back(e.origin);
  return out;
}

CutPolygon lift(const PolygonWithHoles& poly) {
  std::vector<Entry> entries;
  std::vector<std::vector<EntryId>> rings;
  for (std::size_t r = 0; r < poly.rings().size(); ++r) {
    std::vector<EntryId> ring;
    for (std::size_t i = 0; i < poly.rings()[r].size(); ++i) {
      ring.push_back(entry_id(entries.size()));
      entries.push_back({VertexId{r, i}, poly.rings()[r][i]});
    }
    rings.push_back(std::move(ring));
  }
  return CutPolygon(std::move(entries), std::move(rings), {}, {});
}

bool in_entry_wedge(const CutPolygon& poly, EntryId e, const Point& target) {
  return in_closed_wedge(poly.point(e), poly.point(poly.next(e)), poly.point(poly.prev(e)), target);
}

bool cut_sees(const CutPolygon& poly, EntryId u, EntryId v) {
  const Point& p = poly.point(u);
  const Point& q = poly.point(v);
  if (u == v || p == q) return false;
  if (!in_entry_wedge(poly, u, q) || !in_entry_wedge(poly, v, p)) return false;
  for (const Point& pinch : poly.pinches())
    if (!(pinch == p) && !(pinch == q) && on_segment(pinch, p, q)) return false;
  return segment_in_rings(poly.ring_points(), p, q);
}

bool triangle_is_clear(std::span<const std::vector<EntryId>> rings, const std::vector<Entry>& entries,
                       const std::array<EntryId, 3>& corners, std::span<const std::array<EntryId, 2>> own_edges) {
  const std::array<const Point*, 3> c{&entries[index(corners[0])].point, &entries[index(corners[1])].point,
                                      &entries[index(corners[2])].point};
  auto is_corner = [&](EntryId e) { return e == corners[0] || e == corners[1] || e == corners[2]; };

  for (const auto& ring : rings)
    for (const EntryId e : ring) {
      if (is_corner(e)) continue;
      const Point& p = entries[index(e)].point;
      if (p == *c[0] || p == *c[1] || p == *c[2]) continue;
      if (in_closed_triangle(*c[0], *c[1], *c[2], p)) return false;
    }

  // Does the edge leave corner k into the open triangle?
  auto enters_at = [&](std::size_t k, const Point& other) {
    const Point& apex = *c[k];
    const Point& first = *c[(k + 1) % 3];
    const Point& second = *c[(k + 2) % 3];
    return orient_sign(apex, first, other) > 0 && orient_sign(apex, other, second) > 0;
  };

  for (const auto& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const EntryId s = ring[i];
      const EntryId t = ring[(i + 1) % n];
      const bool own = std::any_of(own_edges.begin(), own_edges.end(),
                                   [&](const std::array<EntryId, 2>& o) { return o[0] == s && o[1] == t; });
      if (own) continue;
      const Point& ps = entries[index(s)].point;
      const Point& pt = entries[index(t)].point;
      for (std::size_t k = 0; k < 3; ++k) {
        const Point& a = *c[k];
        const Point& b = *c[(k + 1) % 3];
        if (segments_properly_cross(ps, pt, a, b)) return false;
        if (overlaps_side(ps, pt, a, b)) return false;
        if (ps == a && enters_at(k, pt)) return false;
        if (pt == a && enters_at(k, ps)) return false;
      }
    }
  }
  return true;
}

std::vector<VertexId> map_guards_back(std::span<const VertexId> provenance, std::span<const EntryId> guards) {
  std::vector<VertexId> out;
  out.reserve(guards.size());
  for (const EntryId g : guards) out.push_back(provenance[index(g)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(const CutPolygon& poly) {
  std::ostringstream os;
  os << "cut polygon: " << poly.hole_count() << " hole(s), " << poly.entry_count() << " entries\n";
  for (std::size_t r = 0; r < poly.rings().size(); ++r) {
    os << (r == 0 ? "outer" : "hole " + std::to_string(r)) << ":";
    for (const EntryId e : poly.rings()[r])
      os << " #" << index(e) << "@" << to_string(poly.origin(e)) << to_string(poly.point(e));
    os << "\n";
  }
  for (const Slit& s : poly.slits()) os << "slit #" << index(s.apex_copy) << " -> #" << index(s.end) << "\n";
  for (const Point& p : poly.pinches()) os << "pinch " << to_string(p) << "\n";
  return os.str();
}

}  // namespace vguard
