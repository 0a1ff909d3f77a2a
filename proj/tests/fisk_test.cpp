#include <doctest.h>

#include "support/two_holes.hpp"
#include "support/reference.hpp"
#include "vguard/cutting.hpp"
#include "vguard/errors.hpp"
#include "vguard/fisk.hpp"
#include "vguard/generator.hpp"

using namespace vguard;

namespace {

Scalar triangle_area(const CutPolygon& p, const std::array<EntryId, 3>& t) {
  return reference::cross(p.point(t[0]), p.point(t[1]), p.point(t[2])) / 2;
}

void check_rainbow(const Triangulation& t, const ThreeColoring& c) {
  for (const auto& tri : t.triangles) {
    CHECK(c.of(tri[0]) != c.of(tri[1]));
    CHECK(c.of(tri[1]) != c.of(tri[2]));
    CHECK(c.of(tri[0]) != c.of(tri[2]));
  }
}

CutPolygon hole_free(const PolygonWithHoles& poly) {
  CutPolygon p = lift(poly);
  while (p.hole_count() > 0) p = split_apex(p, find_special_triangle(p)).polygon;
  return p;
}

}  // namespace

TEST_SUITE("fisk") {

TEST_CASE("triangle") {
  const CutPolygon p = lift(fixtures::triangle());
  const Triangulation t = triangulate(p);
  CHECK(t.triangles.size() == 1);
  CHECK(t.dual_edge_count() == 0);
  const ThreeColoring c = three_color(t);
  CHECK(c.class_sizes() == std::array<std::size_t, 3>{1, 1, 1});
  CHECK(select_guards(c).guards.size() == 1);
}

TEST_CASE("convex quadrilateral") {
  const Triangulation t = triangulate(lift(validate({{{0, 0}, {3, 0}, {3, 3}, {0, 3}}})));
  CHECK(t.triangles.size() == 2);
  CHECK(t.dual_edge_count() == 1);
  CHECK(t.diagonals().size() == 1);
}

TEST_CASE("convex pentagon") {
  const CutPolygon p = lift(validate({{{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}}));
  const Triangulation t = triangulate(p);
  CHECK(t.triangles.size() == 3);
  const ThreeColoring c = three_color(t);
  check_rainbow(t, c);
  for (std::size_t k : c.class_sizes()) CHECK(k >= 1);
  CHECK(c.class_sizes()[0] + c.class_sizes()[1] + c.class_sizes()[2] == 5);
}

TEST_CASE("convex hexagon") {
  const Triangulation t = triangulate(lift(fixtures::convex_hexagon()));
  CHECK(select_guards(three_color(t)).guards.size() <= 2);
}

TEST_CASE("holes must be gone") {
  CHECK_THROWS_AS(triangulate(lift(fixtures::two_holes())), std::invalid_argument);
}

TEST_CASE("two-hole instance after both cuts") {
  const TwoHoles fig;
  CutPolygon p = split_apex(lift(fig.poly), {fig.entry(fig.a), 1, fig.entry(fig.b), fig.entry(fig.c)}).polygon;
  p = split_apex(p, {fig.entry(fig.b), 1, fig.entry(fig.e), fig.entry(fig.f)}).polygon;
  const Triangulation t = triangulate(p);
  CHECK(t.triangles.size() == 15);
  CHECK(t.dual_edge_count() == 14);

  Scalar total = 0;
  for (const auto& tri : t.triangles) {
    CHECK(triangle_area(p, tri) > 0);
    total += triangle_area(p, tri);
  }
  // the two cut-away triangles have area 5/2 and 21/4
  CHECK(total == Scalar(41) - Scalar(5, 2) - Scalar(21, 4));

  const ThreeColoring c = three_color(t);
  check_rainbow(t, c);
  const GuardSelection s = select_guards(c);
  CHECK(s.guards.size() <= 5);
  const auto sizes = c.class_sizes();
  CHECK(s.guards.size() == *std::min_element(sizes.begin(), sizes.end()));
}

TEST_CASE("dual graph must be a tree") {
  Triangulation t;
  t.entry_count = 4;
  t.triangles = {{entry_id(0), entry_id(1), entry_id(2)}, {entry_id(0), entry_id(2), entry_id(3)}};
  t.adjacency = {{}, {}};
  CHECK_THROWS_AS(three_color(t), DualNotTree);
}

TEST_CASE("triangulations of generated instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PolygonWithHoles poly =
        generate({.seed = seed, .outer_vertices = 6 + seed % 25, .holes = seed % 4, .hole_vertices = 3 + seed % 2});
    const CutPolygon p = hole_free(poly);
    const Triangulation t = triangulate(p);
    CHECK(t.triangles.size() == p.entry_count() - 2);
    CHECK(t.dual_edge_count() == t.triangles.size() - 1);
    Scalar total = 0;
    for (const auto& tri : t.triangles) {
      CHECK(triangle_area(p, tri) > 0);
      total += triangle_area(p, tri);
    }
    Scalar removed = 0;
    for (const auto& tri : p.removed_triangles()) removed += abs(triangle_area(p, tri));
    CHECK(total + removed == region_area(poly));

    const ThreeColoring c = three_color(t);
    check_rainbow(t, c);
    const GuardSelection s = select_guards(c);
    CHECK(s.guards.size() <= p.entry_count() / 3);
    // every triangle has a guard corner
    for (const auto& tri : t.triangles)
      CHECK((c.of(tri[0]) == s.color || c.of(tri[1]) == s.color || c.of(tri[2]) == s.color));
  }
}

}  // TEST_SUITE
