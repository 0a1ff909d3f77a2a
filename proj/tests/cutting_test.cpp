#include <doctest.h>

#include <random>
#include <set>

#include "support/two_holes.hpp"
#include "support/reference.hpp"
#include "vguard/cutting.hpp"
#include "vguard/generator.hpp"
#include "vguard/special_triangle.hpp"

using namespace vguard;

namespace {

std::vector<Point> walk_points(const CutPolygon& poly, std::size_t ring) {
  std::vector<Point> out;
  for (EntryId e : poly.rings()[ring]) out.push_back(poly.point(e));
  return out;
}

// Coordinates of the walk starting at the first occurrence of `start`.
std::vector<Point> walk_from(const CutPolygon& poly, const Point& start) {
  std::vector<Point> w = walk_points(poly, 0);
  const auto it = std::find(w.begin(), w.end(), start);
  std::rotate(w.begin(), it, w.end());
  return w;
}

bool strictly_inside_any(const CutPolygon& poly, const Point& p) {
  for (const auto& t : poly.removed_triangles())
    if (reference::strictly_inside_triangle({poly.point(t[0]), poly.point(t[1]), poly.point(t[2])}, p)) return true;
  return false;
}

void check_walks(const CutPolygon& poly) {
  std::set<std::size_t> seen;
  for (const auto& ring : poly.rings())
    for (EntryId e : ring) CHECK(seen.insert(index(e)).second);
  CHECK(seen.size() == poly.entry_count());
}

}  // namespace

TEST_SUITE("cutting") {

TEST_CASE("lift") {
  const CutPolygon fig = lift(fixtures::two_holes());
  CHECK(fig.hole_count() == 2);
  CHECK(fig.entry_count() == 15);
  const CutPolygon tri = lift(fixtures::triangle());
  CHECK(tri.hole_count() == 0);
  CHECK(tri.entry_count() == 3);
  const CutPolygon six = lift(fixtures::minimal());
  CHECK(six.hole_count() == 1);
  CHECK(six.entry_count() == 6);
}

TEST_CASE("cutting both special triangles of the two-hole instance") {
  const TwoHoles fig;
  const CutPolygon p0 = lift(fig.poly);
  const SplitResult first = split_apex(p0, {fig.entry(fig.a), 1, fig.entry(fig.b), fig.entry(fig.c)});
  const CutPolygon& p1 = first.polygon;
  CHECK(p1.hole_count() == 1);
  CHECK(p1.entry_count() == 16);
  CHECK(first.delta.origin == fig.a);
  check_walks(p1);

  // ..., (7,0), a1, c, d, b, a2, (0,0), ... in counter-clockwise order
  const std::vector<Point> w = walk_from(p1, {7, 0});
  const std::vector<Point> expected{{7, 0}, {5, 2}, fixtures::pt("6", "-0.5"), {5, -2}, fixtures::pt("4", "-0.5"), {5, 2}, {0, 0}};
  CHECK(std::vector<Point>(w.begin(), w.begin() + 7) == expected);
  CHECK(p1.slits().size() == 2);
  CHECK(p1.removed_triangles().size() == 1);
  CHECK(p1.pinches() == std::vector<Point>{{5, 2}});

  REQUIRE(is_special(p1, fig.entry(fig.b), fig.entry(fig.e), fig.entry(fig.f)));
  const CutPolygon p2 = split_apex(p1, {fig.entry(fig.b), 1, fig.entry(fig.e), fig.entry(fig.f)}).polygon;
  CHECK(p2.hole_count() == 0);
  CHECK(p2.entry_count() == 17);
  check_walks(p2);
}

TEST_CASE("one cut on the minimal instance") {
  const CutPolygon p = lift(fixtures::minimal());
  const CutPolygon q = split_apex(p, find_special_triangle(p)).polygon;
  CHECK(q.hole_count() == 0);
  CHECK(q.entry_count() == 7);
}

TEST_CASE("split rejects bad triangles") {
  const TwoHoles fig;
  const CutPolygon p0 = lift(fig.poly);
  const VertexId far = fixtures::at(fig.poly, {9, 1});
  try {
    split_apex(p0, {fig.entry(far), 1, fig.entry(fig.b), fig.entry(fig.c)});
    FAIL("expected SplitError");
  } catch (const SplitError& e) {
    CHECK(e.kind() == SplitErrorKind::NotSpecial);
  }
  try {
    split_apex(p0, {fig.entry(fig.d), 1, fig.entry(fig.b), fig.entry(fig.c)});
    FAIL("expected SplitError");
  } catch (const SplitError& e) {
    CHECK(e.kind() == SplitErrorKind::ApexOnBaseHole);
  }
}

TEST_CASE("map_guards_back") {
  const TwoHoles fig;
  const SplitResult r = split_apex(lift(fig.poly), {fig.entry(fig.a), 1, fig.entry(fig.b), fig.entry(fig.c)});
  const std::vector<VertexId> prov = r.polygon.provenance();
  const std::vector<EntryId> copies{fig.entry(fig.a), r.delta.added};
  CHECK(map_guards_back(prov, copies) == std::vector<VertexId>{fig.a});
  const std::vector<EntryId> plain{fig.entry(fig.b), fig.entry(fig.d)};
  CHECK(map_guards_back(prov, plain) == std::vector<VertexId>{fig.b, fig.d});
  CHECK(map_guards_back(prov, {}).empty());
}

TEST_CASE("cut properties on generated instances") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const PolygonWithHoles poly = generate(
        {.seed = seed, .outer_vertices = 6 + seed, .holes = 1 + seed % 3, .hole_vertices = 3 + seed % 3, .coordinate_range = 50});
    CutPolygon working = lift(poly);
    std::uniform_int_distribution<long> num(0, 50 * 97);
    while (working.hole_count() > 0) {
      const std::size_t holes = working.hole_count(), entries = working.entry_count();
      working = split_apex(working, find_special_triangle(working)).polygon;
      CHECK(working.hole_count() == holes - 1);
      CHECK(working.entry_count() == entries + 1);
      check_walks(working);

      // the region loses exactly the open special triangles
      for (int i = 0; i < 1000; ++i) {
        const Point p{reference::ratio(num(rng), 97), reference::ratio(num(rng), 97)};
        const RegionPosition before = point_in_region(poly, p);
        const RegionPosition after = working.classify(p);
        if (before == RegionPosition::Boundary || after == RegionPosition::Boundary) continue;
        if (strictly_inside_any(working, p))
          CHECK(after == RegionPosition::Outside);
        else
          CHECK(after == before);
      }

      // visibility only shrinks
      const std::vector<VertexId> prov = working.provenance();
      for (std::size_t u = 0; u < working.entry_count(); ++u)
        for (std::size_t v = u + 1; v < working.entry_count(); ++v)
          if (cut_sees(working, entry_id(u), entry_id(v)))
            CHECK(vertices_see(poly, prov[u], prov[v]));
    }
  }
}

}  // TEST_SUITE
