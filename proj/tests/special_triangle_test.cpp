#include <doctest.h>

#include "support/two_holes.hpp"
#include "support/reference.hpp"
#include "vguard/cutting.hpp"
#include "vguard/generator.hpp"
#include "vguard/special_triangle.hpp"

using namespace vguard;

namespace {

// Independent decision for a lifted polygon: apex strictly left of the hole
// edge b->c and the closed triangle clear of boundary.
bool reference_special(const PolygonWithHoles& poly, VertexId apex, VertexId b, VertexId c) {
  const std::vector<Ring> rings(poly.rings().begin(), poly.rings().end());
  if (reference::cross(poly.point(b), poly.point(c), poly.point(apex)) <= 0) return false;
  return reference::triangle_clear(rings, {poly.point(b), poly.point(c), poly.point(apex)});
}

}  // namespace

TEST_SUITE("special_triangle") {

TEST_CASE("both triangles of the two-hole instance are special") {
  const TwoHoles fig;
  CHECK(is_special(fig.poly, fig.a, fig.b, fig.c));
  CHECK(is_special(fig.poly, fig.b, fig.e, fig.f));
  // base order does not matter
  CHECK(is_special(fig.poly, fig.a, fig.c, fig.b));
  CHECK(reference_special(fig.poly, fig.a, fig.b, fig.c));
  CHECK(reference_special(fig.poly, fig.b, fig.e, fig.f));
}

TEST_CASE("apex (0,0) over the top edge of the first hole") {
  const TwoHoles fig;
  const VertexId origin = fixtures::at(fig.poly, {0, 0});
  CHECK(reference_special(fig.poly, origin, fig.b, fig.c));
  CHECK(is_special(fig.poly, origin, fig.b, fig.c));
}

TEST_CASE("blocked candidates are rejected") {
  const TwoHoles fig;
  const VertexId far = fixtures::at(fig.poly, {9, 1});
  CHECK_FALSE(reference_special(fig.poly, far, fig.b, fig.c));
  CHECK_FALSE(is_special(fig.poly, far, fig.b, fig.c));
  // apex below the base, on the hole side
  const VertexId low = fixtures::at(fig.poly, {5, -3});
  CHECK_FALSE(is_special(fig.poly, low, fig.b, fig.c));
}

TEST_CASE("is_special preconditions") {
  const TwoHoles fig;
  CHECK_THROWS_AS(is_special(fig.poly, fig.a, fig.b, fig.e), std::invalid_argument);
  CHECK_THROWS_AS(is_special(fig.poly, fig.d, fig.b, fig.c), std::invalid_argument);
  CHECK_THROWS_AS(is_special(fig.poly, fig.b, fixtures::at(fig.poly, {0, 0}), fixtures::at(fig.poly, {5, 2})),
                  std::invalid_argument);
}

TEST_CASE("find_special_triangle on the two-hole instance") {
  const TwoHoles fig;
  const CutPolygon lifted = lift(fig.poly);
  const SpecialTriangle t = find_special_triangle(lifted);
  CHECK(t.base_hole >= 1);
  CHECK(is_special(lifted, t.apex, t.b, t.c));
  CHECK(find_special_triangle(lifted) == t);
  const auto all = enumerate_special_triangles(lifted);
  REQUIRE_FALSE(all.empty());
  CHECK(all.front() == t);
  auto has = [&](VertexId apex, VertexId b, VertexId c) {
    return std::find(all.begin(), all.end(), SpecialTriangle{fig.entry(apex), b.ring, fig.entry(b), fig.entry(c)}) !=
           all.end();
  };
  CHECK(has(fig.a, fig.b, fig.c));
  CHECK(has(fig.b, fig.e, fig.f));
}

TEST_CASE("the minimal instance admits at least three special triangles") {
  const PolygonWithHoles poly = fixtures::minimal();
  const auto all = enumerate_special_triangles(lift(poly));
  CHECK(all.size() >= 3);
  for (const SpecialTriangle& t : all)
    CHECK(reference_special(poly, poly.vertex_at(index(t.apex)), poly.vertex_at(index(t.b)), poly.vertex_at(index(t.c))));
}

TEST_CASE("search requires a hole") {
  CHECK_THROWS_AS(find_special_triangle(lift(fixtures::triangle())), std::invalid_argument);
}

TEST_CASE("is_special agrees with the reference on every candidate") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const PolygonWithHoles poly = generate(
        {.seed = seed, .outer_vertices = 7 + seed, .holes = 1 + seed % 3, .hole_vertices = 3 + seed % 2, .coordinate_range = 40});
    for (std::size_t hole = 1; hole < poly.rings().size(); ++hole) {
      for (std::size_t i = 0; i < poly.rings()[hole].size(); ++i) {
        const VertexId b{hole, i};
        const VertexId c = poly.next(b);
        for (const VertexId& apex : poly.vertices()) {
          if (apex.ring == hole) continue;
          CHECK(is_special(poly, apex, b, c) == reference_special(poly, apex, b, c));
        }
      }
    }
  }
}

TEST_CASE("search succeeds at every stage and is sound") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    CutPolygon working = lift(generate({.seed = seed, .outer_vertices = 6 + seed % 20, .holes = 1 + seed % 4, .hole_vertices = 3}));
    while (working.hole_count() > 0) {
      const SpecialTriangle t = find_special_triangle(working);
      REQUIRE(is_special(working, t.apex, t.b, t.c));
      working = split_apex(working, t).polygon;
    }
  }
}

}  // TEST_SUITE
