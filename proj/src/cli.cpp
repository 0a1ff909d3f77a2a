#include "vguard/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vguard/audit.hpp"
#include "vguard/errors.hpp"
#include "vguard/generator.hpp"
#include "vguard/instance_io.hpp"
#include "vguard/svg.hpp"
#include "vguard/verification.hpp"

namespace vguard {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// Writes text to `path`, or to `out` when no path is given.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string dump_counterexample(const std::string& dir, const PolygonWithHoles& poly, const InternalFailure& e) {
  const std::string instance = emit_instance(poly);
  char name[64];
  std::snprintf(name, sizeof name, "counterexample-%016llx.json", static_cast<unsigned long long>(fnv1a(instance)));
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  nlohmann::ordered_json doc;
  doc["error"] = e.what();
  doc["instance"] = nlohmann::ordered_json::parse(instance);
  doc["state"] = e.state();
  write_file(path.string(), doc.dump(2) + "\n");
  return path.string();
}

std::vector<std::array<Point, 2>> gap_segments(const PolygonWithHoles& poly, const CoverageReport& report) {
  std::vector<std::array<Point, 2>> segs;
  for (const Gap& gap : report.gaps) {
    for (const GapPiece& piece : gap.pieces) {
      const EdgeCoverage& edge = report.edges[piece.edge];
      const Point& a = poly.point(edge.from);
      const Point& b = poly.point(edge.to);
      segs.push_back({lerp(a, b, piece.lo), lerp(a, b, piece.hi)});
    }
  }
  return segs;
}

std::string verdict_summary(const GuardSetVerdict& v) {
  std::ostringstream os;
  os << "guards: " << v.count << " (bound " << v.bound << ")" << (v.within_bound() ? "" : " EXCEEDS BOUND") << "\n";
  os << "dominating: " << (v.domination.dominating ? "yes" : "no");
  if (v.domination.witness) os << " (first undominated vertex " << to_string(*v.domination.witness) << ")";
  os << "\nouter boundary gaps: " << v.outer.gaps.size() << "\n";
  for (const Gap& g : v.outer.gaps) os << "  from " << to_string(g.start) << " to " << to_string(g.end) << "\n";
  if (v.holes) {
    os << "hole boundary gaps: " << v.holes->report.gaps.size() << " (h = " << v.holes->hole_count << ")"
       << (v.holes->within_bases ? "" : ", not all inside base edges") << "\n";
  }
  os << "verdict: " << (v.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

struct SeedRange {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
};

SeedRange parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const std::uint64_t s = std::stoull(text);
      return {s, s};
    }
    const SeedRange r{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    if (r.first > r.last) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--seeds", "expected A..B with A <= B, got '" + text + "'");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Vertex guards for polygons with holes", "vguard"};
  app.require_subcommand(1);
  std::string dump_dir = ".";
  app.add_option("--dump-dir", dump_dir, "Directory for counterexample files");

  std::string in_path, out_path, svg_path, guards_path, result_path;
  bool do_verify = false;
  std::size_t limit = kOracleMaxVertices;
  GeneratorConfig gen_cfg;
  std::string seeds = "0..9";

  auto* solve = app.add_subcommand("solve", "Place guards");
  solve->add_option("input", in_path, "Instance file")->required();
  solve->add_option("--out", out_path, "Result file (default stdout)");
  solve->add_option("--svg", svg_path, "Also write a drawing");
  solve->add_flag("--verify", do_verify, "Verify the guard set and exit 2 if it fails");

  auto* verify = app.add_subcommand("verify", "Check a guard set");
  verify->add_option("input", in_path, "Instance file")->required();
  verify->add_option("guards", guards_path, "Result or guard file")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact minimum dominating vertex set");
  oracle->add_option("input", in_path, "Instance file")->required();
  oracle->add_option("--limit", limit, "Maximum vertex count");

  auto* gen = app.add_subcommand("gen", "Random instance");
  gen->add_option("--seed", gen_cfg.seed)->required();
  gen->add_option("--outer", gen_cfg.outer_vertices)->required();
  gen->add_option("--holes", gen_cfg.holes)->required();
  gen->add_option("--hole-vertices", gen_cfg.hole_vertices)->required();
  gen->add_option("--range", gen_cfg.coordinate_range);
  gen->add_option("--out", out_path);

  auto* render = app.add_subcommand("render", "SVG drawing");
  render->add_option("input", in_path, "Instance file")->required();
  render->add_option("result", result_path, "Result or guard file");
  render->add_option("--out", out_path);

  auto* batch = app.add_subcommand("batch", "Generate, solve and audit a seed range");
  batch->add_option("--seeds", seeds, "A..B")->required();
  batch->add_option("--outer", gen_cfg.outer_vertices)->required();
  batch->add_option("--holes", gen_cfg.holes)->required();
  batch->add_option("--hole-vertices", gen_cfg.hole_vertices);
  batch->add_option("--range", gen_cfg.coordinate_range);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const PipelineOptions pipeline_options{hooks.search};
  std::optional<PolygonWithHoles> poly;
  try {
    if (!in_path.empty()) poly = parse_instance(read_file(in_path));

    if (*solve) {
      GuardResult result = place_guards(*poly, pipeline_options);
      std::vector<std::array<VertexId, 2>> bases;
      for (const CutRecord& c : result.certificate.cuts) bases.push_back({c.b, c.c});
      std::optional<GuardSetVerdict> verdict;
      if (do_verify) verdict = verify_guard_set(*poly, result.guards, std::span<const std::array<VertexId, 2>>(bases));
      emit(out, out_path, emit_result(*poly, result, verdict ? &*verdict : nullptr));
      if (!svg_path.empty()) {
        SvgOverlay overlay;
        overlay.guards = result.guards;
        for (const CutRecord& c : result.certificate.cuts) {
          const Point& a = poly->point(c.apex);
          overlay.special_triangles.push_back({a, poly->point(c.b), poly->point(c.c)});
          overlay.slits.push_back({a, poly->point(c.b)});
          overlay.slits.push_back({a, poly->point(c.c)});
        }
        if (verdict) overlay.gaps = gap_segments(*poly, verdict->outer);
        write_file(svg_path, render_svg(*poly, overlay));
      }
      if (verdict && !verdict->ok()) {
        err << verdict_summary(*verdict);
        return kExitVerificationFailed;
      }
      return kExitOk;
    }

    if (*verify) {
      const GuardFile file = parse_guard_file(read_file(guards_path), *poly);
      std::optional<std::span<const std::array<VertexId, 2>>> bases;
      if (file.bases) bases = std::span<const std::array<VertexId, 2>>(*file.bases);
      const GuardSetVerdict verdict = verify_guard_set(*poly, file.guards, bases);
      out << verdict_summary(verdict);
      return verdict.ok() ? kExitOk : kExitVerificationFailed;
    }

    if (*oracle) {
      const VisibilityGraph graph = visibility_graph(*poly);
      const std::vector<VertexId> best = min_dominating_oracle(graph, limit);
      nlohmann::ordered_json doc;
      doc["n"] = poly->vertex_count();
      doc["h"] = poly->hole_count();
      doc["optimum"] = best.size();
      doc["bound"] = guard_bound(poly->vertex_count(), poly->hole_count());
      doc["guards"] = nlohmann::ordered_json::array();
      for (const VertexId& g : best) doc["guards"].push_back({{"ring", g.ring}, {"index", g.index}});
      out << doc.dump(2) << "\n";
      return kExitOk;
    }

    if (*gen) {
      emit(out, out_path, emit_instance(generate(gen_cfg)));
      return kExitOk;
    }

    if (*render) {
      std::optional<SvgOverlay> overlay;
      if (!result_path.empty()) {
        const GuardFile file = parse_guard_file(read_file(result_path), *poly);
        overlay.emplace();
        overlay->guards = file.guards;
        overlay->special_triangles = file.special_triangles;
        for (const auto& t : file.special_triangles) {
          overlay->slits.push_back({t[0], t[1]});
          overlay->slits.push_back({t[0], t[2]});
        }
        overlay->gaps = gap_segments(*poly, boundary_coverage(*poly, file.guards));
      }
      emit(out, out_path, render_svg(*poly, overlay));
      return kExitOk;
    }

    if (*batch) {
      const SeedRange range = parse_seed_range(seeds);
      std::size_t failed = 0;
      for (std::uint64_t s = range.first;; ++s) {
        GeneratorConfig cfg = gen_cfg;
        cfg.seed = s;
        const PolygonWithHoles instance = generate(cfg);
        try {
          const GuardResult result = place_guards(instance, pipeline_options);
          const AuditReport report = audit(instance, result, {100, s});
          out << "seed " << s << ": n=" << report.n << " h=" << report.h << " guards=" << report.guards << "/"
              << report.bound << " " << (report.ok() ? "ok" : "FAIL " + report.failures()) << "\n";
          if (!report.ok()) ++failed;
        } catch (const InternalFailure& e) {
          err << "seed " << s << ": " << e.what() << "; counterexample written to "
              << dump_counterexample(dump_dir, instance, e) << "\n";
          return kExitInternalFailure;
        }
        if (s == range.last) break;
      }
      out << (range.last - range.first + 1 - failed) << "/" << (range.last - range.first + 1) << " instances passed\n";
      return failed == 0 ? kExitOk : kExitVerificationFailed;
    }
  } catch (const InternalFailure& e) {
    std::string where = "(no instance)";
    if (poly) where = dump_counterexample(dump_dir, *poly, e);
    err << "internal failure: " << e.what() << "\ncounterexample written to " << where << "\n";
    return kExitInternalFailure;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const ValidationError& e) {
    err << "invalid polygon: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace vguard
