#include "vguard/cutting.hpp"

namespace vguard {

SplitResult split_apex(const CutPolygon& poly, const SpecialTriangle& t) {
  const EntryLocation apex_at = poly.locate(t.apex);
  if (apex_at.ring == t.base_hole) throw SplitError(SplitErrorKind::ApexOnBaseHole, "apex lies on the base hole");
  if (t.base_hole == 0 || t.base_hole >= poly.rings().size() || poly.locate(t.b).ring != t.base_hole ||
      poly.next(t.b) != t.c)
    throw SplitError(SplitErrorKind::NotSpecial, "base is not a walk edge of the stated hole");
  bool special = false;
  try {
    special = is_special(poly, t.apex, t.b, t.c);
  } catch (const std::invalid_argument&) {
    special = false;
  }
  if (!special) throw SplitError(SplitErrorKind::NotSpecial, "triangle is not special in the working polygon");

  std::vector<Entry> entries = poly.entries();
  const EntryId copy = entry_id(entries.size());
  entries.push_back(poly.entry(t.apex));

  const auto& hole = poly.rings()[t.base_hole];
  const std::size_t start = poly.locate(t.c).position;
  std::vector<EntryId> chain;
  chain.reserve(hole.size());
  for (std::size_t i = 0; i < hole.size(); ++i) chain.push_back(hole[(start + i) % hole.size()]);
  // chain = c, ..., b

  std::vector<std::vector<EntryId>> rings;
  for (std::size_t r = 0; r < poly.rings().size(); ++r) {
    if (r == t.base_hole) continue;
    const auto& ring = poly.rings()[r];
    if (r != apex_at.ring) {
      rings.push_back(ring);
      continue;
    }
    std::vector<EntryId> spliced(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(apex_at.position) + 1);
    spliced.insert(spliced.end(), chain.begin(), chain.end());
    spliced.push_back(copy);
    spliced.insert(spliced.end(), ring.begin() + static_cast<std::ptrdiff_t>(apex_at.position) + 1, ring.end());
    rings.push_back(std::move(spliced));
  }

  std::vector<Slit> slits = poly.slits();
  slits.push_back({t.apex, t.c});
  slits.push_back({copy, t.b});
  std::vector<std::array<EntryId, 3>> removed = poly.removed_triangles();
  removed.push_back({t.apex, t.b, t.c});

  const VertexId origin = poly.origin(t.apex);
  return SplitResult{CutPolygon(std::move(entries), std::move(rings), std::move(slits), std::move(removed)),
                     GuardMappingDelta{copy, origin}};
}

}  // namespace vguard
