#include "vguard/pipeline.hpp"

#include <sstream>

#include "vguard/cutting.hpp"
#include "vguard/errors.hpp"

namespace vguard {

GuardResult place_guards(const PolygonWithHoles& poly, const PipelineOptions& options) {
  const std::size_t n = poly.vertex_count();
  const std::size_t h = poly.hole_count();
  CutPolygon working = lift(poly);
  std::vector<CutRecord> cuts;
  for (std::size_t k = 0; k < h; ++k) {
    const SpecialTriangle t = options.search(working);
    CutRecord record{t, working.origin(t.apex), working.origin(t.b), working.origin(t.c), 0, 0};
    SplitResult split = split_apex(working, t);
    if (split.polygon.hole_count() + 1 != working.hole_count() ||
        split.polygon.entry_count() != working.entry_count() + 1)
      throw InternalFailure("split broke the count law", describe(split.polygon));
    working = std::move(split.polygon);
    record.holes_after = working.hole_count();
    record.entries_after = working.entry_count();
    cuts.push_back(record);
  }

  Triangulation triangulation = triangulate(working);
  ThreeColoring coloring = three_color(triangulation);
  GuardSelection selection = select_guards(coloring);
  const std::vector<VertexId> provenance = working.provenance();
  std::vector<VertexId> guards = map_guards_back(provenance, selection.guards);

  const std::size_t bound = guard_bound(n, h);
  if (guards.size() > bound)
    throw InternalFailure("guard count " + std::to_string(guards.size()) + " exceeds bound " + std::to_string(bound),
                          describe(working));
  return GuardResult{std::move(guards), bound,
                     Certificate{std::move(cuts), std::move(working), std::move(triangulation), std::move(coloring),
                                 std::move(selection)}};
}

std::vector<VertexId> replay(const PolygonWithHoles& poly, const Certificate& certificate) {
  CutPolygon working = lift(poly);
  for (const CutRecord& cut : certificate.cuts) working = split_apex(working, cut.triangle).polygon;
  if (working.rings() != certificate.final_polygon.rings())
    throw InternalFailure("replayed cuts disagree with the certificate", describe(working));
  const GuardSelection selection = select_guards(certificate.coloring);
  const std::vector<VertexId> provenance = working.provenance();
  return map_guards_back(provenance, selection.guards);
}

std::string explain(const GuardResult& result) {
  const Certificate& cert = result.certificate;
  std::ostringstream os;
  const std::size_t m = cert.final_polygon.entry_count();
  const std::size_t h = cert.cuts.size();
  os << "holes: " << h << ", vertices: " << m - h << ", bound floor((n+h)/3) = " << result.bound << "\n";
  os << "cuts: " << h << "\n";
  for (std::size_t i = 0; i < h; ++i) {
    const CutRecord& c = cert.cuts[i];
    os << "  cut " << i + 1 << ": apex " << to_string(c.apex) << " over hole edge " << to_string(c.b) << "-"
       << to_string(c.c) << " -> " << c.holes_after << " hole(s), " << c.entries_after << " entries\n";
  }
  const auto sizes = cert.coloring.class_sizes();
  os << "triangulation: " << cert.triangulation.triangles.size() << " triangles over " << m << " entries\n";
  os << "colour classes: " << sizes[0] << " / " << sizes[1] << " / " << sizes[2] << " (sum " << sizes[0] + sizes[1] + sizes[2]
     << ")\n";
  os << "chosen colour: " << cert.selection.color << " (" << cert.selection.guards.size() << " entries)\n";
  os << "guards: " << result.guards.size() << " <=";
  os << " " << result.bound << "\n";
  for (const VertexId& g : result.guards) os << "  " << to_string(g) << "\n";
  return os.str();
}

}  // namespace vguard
