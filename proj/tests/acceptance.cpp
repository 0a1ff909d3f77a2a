// Acceptance checks. Prints one PASS/FAIL line per criterion; with an argument
// runs only that criterion. Exit status is non-zero if any selected criterion fails.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "support/two_holes.hpp"
#include "support/reference.hpp"
#include "vguard/audit.hpp"
#include "vguard/cli.hpp"
#include "vguard/cutting.hpp"
#include "vguard/errors.hpp"
#include "vguard/fisk.hpp"
#include "vguard/generator.hpp"
#include "vguard/pipeline.hpp"
#include "vguard/special_triangle.hpp"
#include "vguard/verification.hpp"

using namespace vguard;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

Scalar triangle_area(const CutPolygon& p, const std::array<EntryId, 3>& t) {
  const std::array<Point, 3> pts{p.point(t[0]), p.point(t[1]), p.point(t[2])};
  return twice_signed_area(pts) / 2;
}

Scalar triangulated_area(const CutPolygon& p, const Triangulation& t) {
  Scalar total = 0;
  for (const auto& tri : t.triangles) total += triangle_area(p, tri);
  return total;
}

Scalar literal_area(const PolygonWithHoles& poly) {
  Scalar a = twice_signed_area(poly.outer()) / 2;
  for (const Ring& h : poly.holes()) a -= abs(twice_signed_area(h)) / 2;
  return a;
}

std::vector<std::array<VertexId, 2>> bases_of(const GuardResult& r) {
  std::vector<std::array<VertexId, 2>> out;
  for (const CutRecord& c : r.certificate.cuts) out.push_back({c.b, c.c});
  return out;
}

Outcome two_hole_golden() {
  Outcome o;
  const auto t0 = Clock::now();
  const TwoHoles fig;
  o.require(fig.poly.vertex_count() == 15 && fig.poly.hole_count() == 2, "n=15, h=2");
  o.require(is_special(fig.poly, fig.a, fig.b, fig.c), "is_special(apex (5,2), base (4,-0.5)-(6,-0.5))");
  o.require(is_special(fig.poly, fig.b, fig.e, fig.f), "is_special(apex (4,-0.5), base (1,-4)-(4,-4))");
  const GuardResult r = place_guards(fig.poly);
  o.require(r.guards.size() <= 5, "guards <= 5");
  o.require(is_dominating(visibility_graph(fig.poly), r.guards).dominating, "domination");
  o.require(boundary_coverage(fig.poly, r.guards).covered(), "outer boundary coverage");
  const double s = seconds_since(t0);
  o.require(s < 1.0, "runtime < 1 s");
  o.note(std::to_string(r.guards.size()) + " guards, " + std::to_string(s) + " s");
  return o;
}

Outcome count_law() {
  Outcome o;
  const TwoHoles fig;
  const CutPolygon p1 = split_apex(lift(fig.poly), {fig.entry(fig.a), 1, fig.entry(fig.b), fig.entry(fig.c)}).polygon;
  o.require(p1.hole_count() == 1 && p1.entry_count() == 16, "first cut gives 1 hole, 16 entries");
  const CutPolygon p2 = split_apex(p1, {fig.entry(fig.b), 1, fig.entry(fig.e), fig.entry(fig.f)}).polygon;
  o.require(p2.hole_count() == 0 && p2.entry_count() == 17, "second cut gives 0 holes, 17 entries");
  const Triangulation t = triangulate(p2);
  o.require(t.triangles.size() == 15, "15 triangles");
  const Scalar sum = triangulated_area(p2, t);
  const Scalar expected = literal_area(fig.poly);
  o.require(sum == expected, "triangle area sum is " + to_string(sum) + ", area(outer) - area(h1) - area(h2) is " +
                                 to_string(expected));
  Scalar removed = 0;
  for (const auto& tri : p2.removed_triangles()) removed += abs(triangle_area(p2, tri));
  o.note("triangles + cut-away triangles = " + to_string(sum + removed) +
         (sum + removed == region_area(fig.poly) ? " (equals region area)" : " (differs from region area)"));
  return o;
}

Outcome minimal_instance() {
  Outcome o;
  const PolygonWithHoles poly = fixtures::minimal();
  o.require(poly.vertex_count() == 6 && poly.hole_count() == 1, "n=6, h=1");
  const GuardResult r = place_guards(poly);
  o.require(r.guards.size() <= 2, "guards <= 2");
  const std::size_t specials = enumerate_special_triangles(lift(poly)).size();
  o.require(specials >= 3, ">= 3 special triangles");
  const std::size_t best = min_dominating_oracle(visibility_graph(poly)).size();
  o.require(best <= r.guards.size(), "oracle <= pipeline");
  o.note(std::to_string(specials) + " special triangles, oracle " + std::to_string(best) + ", pipeline " +
         std::to_string(r.guards.size()));
  return o;
}

Outcome property_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t failed = 0, literal_area_failures = 0, with_holes = 0;
  std::string first_failure;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GeneratorConfig cfg{.seed = seed, .outer_vertices = 6 + seed % 25, .holes = seed % 4, .hole_vertices = 3 + seed % 3};
    const PolygonWithHoles poly = generate(cfg);
    const GuardResult r = place_guards(poly);
    const AuditReport report = audit(poly, r, {100, seed});
    if (!report.ok()) {
      ++failed;
      if (first_failure.empty()) first_failure = "seed " + std::to_string(seed) + ": " + report.failures();
    }
    const Scalar sum = triangulated_area(r.certificate.final_polygon, r.certificate.triangulation);
    if (sum != literal_area(poly)) ++literal_area_failures;
    if (poly.hole_count() > 0) ++with_holes;
  }
  const double s = seconds_since(t0);
  o.require(failed == 0, std::to_string(failed) + " instance(s) failed the audit (" + first_failure + ")");
  o.require(literal_area_failures == 0, "triangle area sum equals area(outer) - sum area(holes) on only " +
                                            std::to_string(200 - literal_area_failures) + "/200 instances (" +
                                            std::to_string(with_holes) + " have holes)");
  o.require(s < 300, "runtime < 5 min");
  o.note("bound, domination, coverage, hole gaps, symmetry, count law, cut-area identity and replay held on " +
         std::to_string(200 - failed) + "/200; " + std::to_string(s) + " s");
  return o;
}

Outcome oracle_sandwich() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t holes = seed % 2;
    const PolygonWithHoles poly = generate(
        {.seed = 1000 + seed, .outer_vertices = 6 + seed % (holes ? 4 : 7), .holes = holes, .hole_vertices = 3});
    if (poly.vertex_count() > 12) {
      o.require(false, "instance with n <= 12");
      continue;
    }
    const VisibilityGraph g = visibility_graph(poly);
    const std::vector<VertexId> best = min_dominating_oracle(g);
    const std::size_t pipeline = place_guards(poly).guards.size();
    const bool good = best.size() <= pipeline && pipeline <= guard_bound(poly.vertex_count(), poly.hole_count()) &&
                      is_dominating(g, best).dominating;
    o.require(good, "seed " + std::to_string(1000 + seed));
    ok += good;
  }
  const double s = seconds_since(t0);
  o.require(s < 120, "runtime < 2 min");
  o.note(std::to_string(ok) + "/50 sandwiched; " + std::to_string(s) + " s");
  return o;
}

Outcome checker_exactness() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> den(1, 1000);
  std::size_t checks = 0, disagreements = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PolygonWithHoles poly =
        generate({.seed = 500 + seed, .outer_vertices = 8 + seed % 8, .holes = seed % 4, .hole_vertices = 3});
    const std::vector<VertexId> guards = place_guards(poly).guards;
    for (const VertexId& g : guards) {
      for (const VertexId& v : poly.vertices()) {
        const VertexId w = poly.next(v);
        const std::vector<Interval> set = visible_interval_set(poly, g, v, w);
        for (int k = 0; k < 100; ++k) {
          const long d = den(rng);
          const Scalar t = reference::ratio(std::uniform_int_distribution<long>(0, d)(rng), d);
          bool in_set = false;
          for (const Interval& i : set) in_set = in_set || (i.lo <= t && t <= i.hi);
          const Point q = lerp(poly.point(v), poly.point(w), t);
          const bool visible = q == poly.point(g) || segment_in_region(poly, poly.point(g), q);
          disagreements += in_set != visible;
          ++checks;
        }
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreement(s)");
  o.note(std::to_string(checks) + " point checks");
  return o;
}

int run_binary(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome falsifiability() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "vguard-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = VGUARD_CLI_PATH;
  const std::string in = fixtures::data_path("two_holes.json");

  const int solved = run_binary(cli + " solve " + in + " --out " + (dir / "result.json").string() + " > /dev/null");
  o.require(solved == 0, "solve exits 0");
  std::ifstream result(dir / "result.json");
  auto doc = nlohmann::json::parse(result);
  doc["guards"].erase(doc["guards"].size() - 1);
  std::ofstream(dir / "truncated.json") << doc.dump(2);
  const int truncated = run_binary(cli + " verify " + in + " " + (dir / "truncated.json").string() + " > /dev/null");
  o.require(truncated == 2, "truncated guard set exits 2 (got " + std::to_string(truncated) + ")");

  CliHooks hooks;
  hooks.search = [](const CutPolygon& p) -> SpecialTriangle { throw NoSpecialTriangleFound("injected", describe(p)); };
  std::ostringstream out, err;
  const int internal = run_cli({"--dump-dir", dir.string(), "solve", in}, out, err, hooks);
  o.require(internal == 3, "always-fail search exits 3");
  bool dumped = false;
  for (const auto& entry : fs::directory_iterator(dir))
    dumped = dumped || entry.path().filename().string().starts_with("counterexample-");
  o.require(dumped, "counterexample file written");
  o.note("verify exit " + std::to_string(truncated) + ", internal failure exit " + std::to_string(internal));
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"two-hole instance: n, h, special triangles, guards, domination, coverage, < 1 s", two_hole_golden},
      {"cut count law and triangulation of the two-hole instance", count_law},
      {"minimal n=6 instance", minimal_instance},
      {"property suite over 200 generated instances", property_suite},
      {"oracle sandwich on 50 instances with n <= 12", oracle_sandwich},
      {"interval sets agree with point-wise visibility", checker_exactness},
      {"exit codes 2 and 3", falsifiability},
  };
  std::size_t first = 1, last = criteria.size();
  if (argc > 1) first = last = std::stoul(argv[1]);

  bool all = true;
  for (std::size_t i = first; i <= last; ++i) {
    Outcome o;
    try {
      o = criteria[i - 1].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.passed;
    std::cout << "criterion " << i << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i - 1].title << "\n    "
              << o.detail << "\n";
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
