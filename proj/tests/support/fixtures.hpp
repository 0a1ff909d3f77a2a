#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "vguard/instance_io.hpp"
#include "vguard/polygon.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(VGUARD_TEST_DATA) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline vguard::PolygonWithHoles load(const std::string& name) { return vguard::parse_instance(read(name)); }

inline vguard::PolygonWithHoles two_holes() { return load("two_holes.json"); }
inline vguard::PolygonWithHoles triangle() { return load("triangle.json"); }
// Triangle with a generically placed triangular hole, n = 6.
inline vguard::PolygonWithHoles minimal() { return load("minimal.json"); }

inline vguard::PolygonWithHoles convex_hexagon() {
  return vguard::validate({{{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}}});
}

// Looks a vertex up by coordinate; fails loudly when absent.
inline vguard::VertexId at(const vguard::PolygonWithHoles& poly, const vguard::Point& p) {
  for (const vguard::VertexId& v : poly.vertices())
    if (poly.point(v) == p) return v;
  throw std::out_of_range("no vertex at " + vguard::to_string(p));
}

inline vguard::Point pt(const char* x, const char* y) { return {vguard::parse_scalar(x), vguard::parse_scalar(y)}; }

}  // namespace fixtures
