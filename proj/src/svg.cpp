#include "vguard/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace vguard {

namespace {

struct Frame {
  double min_x;
  double max_y;
  double scale;
  double margin;

  double x(const Point& p) const { return margin + (p.x.get_d() - min_x) * scale; }
  double y(const Point& p) const { return margin + (max_y - p.y.get_d()) * scale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string path_of(const Frame& f, const Ring& ring) {
  std::string d;
  for (std::size_t i = 0; i < ring.size(); ++i)
    d += (i == 0 ? "M" : " L") + num(f.x(ring[i])) + " " + num(f.y(ring[i]));
  return d + " Z";
}

std::string line(const Frame& f, const Point& a, const Point& b, const std::string& style) {
  return "  <line x1=\"" + num(f.x(a)) + "\" y1=\"" + num(f.y(a)) + "\" x2=\"" + num(f.x(b)) + "\" y2=\"" +
         num(f.y(b)) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const PolygonWithHoles& poly, const std::optional<SvgOverlay>& overlay) {
  const Ring& outer = poly.outer();
  double min_x = outer[0].x.get_d(), max_x = min_x, min_y = outer[0].y.get_d(), max_y = min_y;
  for (const Point& p : outer) {
    min_x = std::min(min_x, p.x.get_d());
    max_x = std::max(max_x, p.x.get_d());
    min_y = std::min(min_y, p.y.get_d());
    max_y = std::max(max_y, p.y.get_d());
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const Frame f{min_x, max_y, 600.0 / extent, 20.0};
  const double width = 2 * f.margin + (max_x - min_x) * f.scale;
  const double height = 2 * f.margin + (max_y - min_y) * f.scale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "  <path d=\"" << path_of(f, outer) << "\" fill=\"#e8eef7\" stroke=\"#1f3b63\" stroke-width=\"2\"/>\n";
  for (const Ring& h : poly.holes())
    out << "  <path d=\"" << path_of(f, h) << "\" fill=\"#ffffff\" stroke=\"#1f3b63\" stroke-width=\"2\"/>\n";

  if (overlay) {
    for (const auto& t : overlay->special_triangles)
      out << "  <path d=\"" << path_of(f, Ring(t.begin(), t.end()))
          << "\" fill=\"#f4d35e\" fill-opacity=\"0.4\" stroke=\"#b08900\" stroke-dasharray=\"6 4\"/>\n";
    for (const auto& s : overlay->slits)
      out << line(f, s[0], s[1], "stroke=\"#b08900\" stroke-width=\"1.5\" stroke-dasharray=\"3 3\"");
    for (const auto& g : overlay->gaps) out << line(f, g[0], g[1], "stroke=\"#d1495b\" stroke-width=\"5\"");
    for (const VertexId& g : overlay->guards) {
      const Point& p = poly.point(g);
      out << "  <circle cx=\"" << num(f.x(p)) << "\" cy=\"" << num(f.y(p))
          << "\" r=\"7\" fill=\"#2a9d8f\" stroke=\"#0b3d36\"/>\n";
    }
  }
  for (const VertexId& v : poly.vertices()) {
    const Point& p = poly.point(v);
    out << "  <circle cx=\"" << num(f.x(p)) << "\" cy=\"" << num(f.y(p)) << "\" r=\"2.5\" fill=\"#1f3b63\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace vguard
