#include "vguard/instance_io.hpp"

#include <json.hpp>

namespace vguard {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ParseError structural(const std::string& path, const std::string& what) {
  return ParseError(path + ": " + what, 0, 0);
}

ParseError syntax(std::string_view text, const json::parse_error& e) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
  for (std::size_t i = 0; i < upto; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        e.what(),
                    line, column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw syntax(text, e);
  }
}

Scalar read_scalar(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(mpz_class(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw structural(path, e.what());
    }
  }
  if (v.is_number_float()) throw structural(path, "non-integer numbers must be given as exact strings, e.g. \"-0.5\"");
  throw structural(path, "expected a coordinate");
}

Ring read_ring(const json& v, const std::string& path) {
  if (!v.is_array()) throw structural(path, "expected an array of points");
  Ring ring;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string here = path + "[" + std::to_string(i) + "]";
    const json& p = v[i];
    if (!p.is_array() || p.size() != 2) throw structural(here, "expected [x, y]");
    ring.emplace_back(read_scalar(p[0], here + "[0]"), read_scalar(p[1], here + "[1]"));
  }
  return ring;
}

ordered_json coordinate(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return to_string(s);
}

ordered_json vertex_json(const PolygonWithHoles& poly, VertexId id) {
  const Point& p = poly.point(id);
  return ordered_json{{"ring", id.ring}, {"index", id.index}, {"x", to_string(p.x)}, {"y", to_string(p.y)}};
}

ordered_json vertex_ref(VertexId id) { return ordered_json{{"ring", id.ring}, {"index", id.index}}; }

VertexId read_vertex(const json& v, const PolygonWithHoles& poly, const std::string& path) {
  if (!v.is_object() || !v.contains("ring") || !v.contains("index") || !v["ring"].is_number_unsigned() ||
      !v["index"].is_number_unsigned())
    throw structural(path, "expected {\"ring\": r, \"index\": i}");
  const VertexId id{v["ring"].get<std::size_t>(), v["index"].get<std::size_t>()};
  if (id.ring >= poly.rings().size() || id.index >= poly.rings()[id.ring].size())
    throw structural(path, "vertex " + to_string(id) + " does not exist");
  return id;
}

}  // namespace

std::vector<Ring> parse_rings(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw structural("$", "expected an object with \"outer\" and \"holes\"");
  if (!doc.contains("outer")) throw structural("$", "missing \"outer\"");
  std::vector<Ring> rings{read_ring(doc["outer"], "$.outer")};
  if (doc.contains("holes")) {
    const json& holes = doc["holes"];
    if (!holes.is_array()) throw structural("$.holes", "expected an array of rings");
    for (std::size_t k = 0; k < holes.size(); ++k)
      rings.push_back(read_ring(holes[k], "$.holes[" + std::to_string(k) + "]"));
  }
  return rings;
}

PolygonWithHoles parse_instance(std::string_view text) { return validate(parse_rings(text)); }

std::string emit_instance(const PolygonWithHoles& poly) {
  auto ring_json = [](const Ring& ring) {
    ordered_json out = ordered_json::array();
    for (const Point& p : ring) out.push_back(ordered_json::array({coordinate(p.x), coordinate(p.y)}));
    return out;
  };
  ordered_json doc;
  doc["outer"] = ring_json(poly.outer());
  doc["holes"] = ordered_json::array();
  for (const Ring& h : poly.holes()) doc["holes"].push_back(ring_json(h));
  return doc.dump(2) + "\n";
}

std::string emit_result(const PolygonWithHoles& poly, const GuardResult& result, const GuardSetVerdict* verdict) {
  const Certificate& cert = result.certificate;
  ordered_json doc;
  doc["n"] = poly.vertex_count();
  doc["h"] = poly.hole_count();
  doc["bound"] = result.bound;
  doc["guards"] = ordered_json::array();
  for (const VertexId& g : result.guards) doc["guards"].push_back(vertex_json(poly, g));

  ordered_json c;
  c["cuts"] = ordered_json::array();
  for (const CutRecord& cut : cert.cuts) {
    c["cuts"].push_back(ordered_json{{"apex", vertex_ref(cut.apex)},
                                     {"base", ordered_json::array({vertex_ref(cut.b), vertex_ref(cut.c)})},
                                     {"apex_entry", index(cut.triangle.apex)},
                                     {"holes_after", cut.holes_after},
                                     {"entries_after", cut.entries_after}});
  }
  const CutPolygon& fin = cert.final_polygon;
  c["entries"] = ordered_json::array();
  for (std::size_t e = 0; e < fin.entry_count(); ++e) {
    const VertexId o = fin.origin(entry_id(e));
    c["entries"].push_back(ordered_json{{"entry", e}, {"ring", o.ring}, {"index", o.index}});
  }
  c["walk"] = ordered_json::array();
  for (const EntryId e : fin.rings()[0]) c["walk"].push_back(index(e));
  c["triangles"] = ordered_json::array();
  for (const auto& tri : cert.triangulation.triangles)
    c["triangles"].push_back(ordered_json::array({index(tri[0]), index(tri[1]), index(tri[2])}));
  c["coloring"] = cert.coloring.color;
  c["chosen_color"] = cert.selection.color;
  c["guard_entries"] = ordered_json::array();
  for (const EntryId e : cert.selection.guards) c["guard_entries"].push_back(index(e));
  doc["certificate"] = std::move(c);

  if (verdict) {
    ordered_json v;
    v["ok"] = verdict->ok();
    v["within_bound"] = verdict->within_bound();
    v["dominating"] = verdict->domination.dominating;
    if (verdict->domination.witness) v["undominated"] = vertex_ref(*verdict->domination.witness);
    v["outer_boundary_gaps"] = verdict->outer.gaps.size();
    if (verdict->holes) {
      v["hole_gaps"] = verdict->holes->report.gaps.size();
      v["hole_gaps_within_bases"] = verdict->holes->within_bases;
    }
    doc["verification"] = std::move(v);
  }
  return doc.dump(2) + "\n";
}

GuardFile parse_guard_file(std::string_view text, const PolygonWithHoles& poly) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("guards") || !doc["guards"].is_array())
    throw structural("$", "expected an object with a \"guards\" array");
  GuardFile out;
  for (std::size_t i = 0; i < doc["guards"].size(); ++i)
    out.guards.push_back(read_vertex(doc["guards"][i], poly, "$.guards[" + std::to_string(i) + "]"));
  std::sort(out.guards.begin(), out.guards.end());
  out.guards.erase(std::unique(out.guards.begin(), out.guards.end()), out.guards.end());

  if (doc.contains("certificate") && doc["certificate"].contains("cuts")) {
    const json& cuts = doc["certificate"]["cuts"];
    std::vector<std::array<VertexId, 2>> bases;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const std::string path = "$.certificate.cuts[" + std::to_string(i) + "]";
      if (!cuts[i].contains("base") || !cuts[i]["base"].is_array() || cuts[i]["base"].size() != 2)
        throw structural(path, "expected a two-vertex \"base\"");
      const VertexId b = read_vertex(cuts[i]["base"][0], poly, path + ".base[0]");
      const VertexId c = read_vertex(cuts[i]["base"][1], poly, path + ".base[1]");
      bases.push_back({b, c});
      if (cuts[i].contains("apex")) {
        const VertexId a = read_vertex(cuts[i]["apex"], poly, path + ".apex");
        out.special_triangles.push_back({poly.point(a), poly.point(b), poly.point(c)});
      }
    }
    out.bases = std::move(bases);
  }
  return out;
}

}  // namespace vguard
