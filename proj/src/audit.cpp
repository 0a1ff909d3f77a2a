#include "vguard/audit.hpp"

#include <random>

namespace vguard {

namespace {

Scalar triangle_area(const Point& a, const Point& b, const Point& c) {
  const std::array<Point, 3> t{a, b, c};
  return twice_signed_area(t) / 2;
}

}  // namespace

bool AuditReport::ok() const {
  for (const AuditCheck& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string AuditReport::failures() const {
  std::string out;
  for (const AuditCheck& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

AuditReport audit(const PolygonWithHoles& poly, const GuardResult& result, const AuditOptions& options) {
  AuditReport report;
  report.n = poly.vertex_count();
  report.h = poly.hole_count();
  report.guards = result.guards.size();
  report.bound = guard_bound(report.n, report.h);
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  const Certificate& cert = result.certificate;
  std::vector<std::array<VertexId, 2>> bases;
  for (const CutRecord& cut : cert.cuts) bases.push_back({cut.b, cut.c});
  const GuardSetVerdict verdict = verify_guard_set(poly, result.guards, std::span<const std::array<VertexId, 2>>(bases));

  add("bound", verdict.within_bound(), std::to_string(verdict.count) + " <= " + std::to_string(report.bound));
  add("dominating", verdict.domination.dominating,
      verdict.domination.witness ? "undominated " + to_string(*verdict.domination.witness) : "");
  add("outer_coverage", verdict.outer.covered(), std::to_string(verdict.outer.gaps.size()) + " gap(s)");
  add("hole_gap_count", verdict.holes->within_count,
      std::to_string(verdict.holes->report.gaps.size()) + " gap(s), h = " + std::to_string(report.h));
  add("hole_gaps_in_bases", verdict.holes->within_bases, "");

  std::mt19937_64 rng(options.sample_seed);
  const std::vector<VertexId> ids = poly.vertices();
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  std::size_t asymmetric = 0;
  for (std::size_t i = 0; i < options.symmetry_pairs; ++i) {
    const VertexId u = ids[pick(rng)];
    const VertexId v = ids[pick(rng)];
    if (u == v) continue;
    if (vertices_see(poly, u, v) != vertices_see(poly, v, u)) ++asymmetric;
  }
  add("visibility_symmetry", asymmetric == 0, std::to_string(asymmetric) + " asymmetric pair(s)");

  const std::size_t m = cert.final_polygon.entry_count();
  const std::size_t t = cert.triangulation.triangles.size();
  add("triangle_count", t + 2 == m, std::to_string(t) + " triangles, " + std::to_string(m) + " entries");

  Scalar covered = 0;
  const CutPolygon& fin = cert.final_polygon;
  for (const auto& tri : cert.triangulation.triangles)
    covered += triangle_area(fin.point(tri[0]), fin.point(tri[1]), fin.point(tri[2]));
  Scalar removed = 0;
  for (const auto& tri : fin.removed_triangles()) removed += abs(triangle_area(fin.point(tri[0]), fin.point(tri[1]), fin.point(tri[2])));
  const Scalar area = region_area(poly);
  add("area_law", covered + removed == area,
      "triangles " + to_string(covered) + " + cut " + to_string(removed) + " vs region " + to_string(area));

  bool replay_ok = false;
  try {
    replay_ok = replay(poly, cert) == result.guards;
  } catch (const std::exception&) {
  }
  add("replay", replay_ok, "");
  return report;
}

}  // namespace vguard
