#include "vguard/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>

namespace vguard {

namespace {

constexpr int kOuterAttempts = 50;
constexpr int kHoleAttempts = 400;

bool collinear_with_any(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orient_sign(pts[i], pts[j], p) == 0) return true;
  return false;
}

// Distinct integer points, no three collinear. A point that would break general
// position is nudged by one grid step until it fits.
std::vector<Point> general_position_points(std::mt19937_64& rng, std::size_t k, long range) {
  std::uniform_int_distribution<long> coord(0, range);
  std::uniform_int_distribution<int> step(-1, 1);
  std::vector<Point> pts;
  std::set<Point> used;
  int budget = static_cast<int>(k) * 200;
  while (pts.size() < k) {
    if (--budget < 0) throw GenerationFailed("could not place points in general position", 0);
    Point p(coord(rng), coord(rng));
    for (int nudge = 0; nudge < 8 && (used.count(p) || collinear_with_any(pts, p)); ++nudge) {
      p = Point(std::clamp<long>(p.x.get_num().get_si() + step(rng), 0, range),
                std::clamp<long>(p.y.get_num().get_si() + step(rng), 0, range));
    }
    if (used.count(p) || collinear_with_any(pts, p)) continue;
    used.insert(p);
    pts.push_back(p);
  }
  return pts;
}

// Repeatedly reverses the path between two crossing edges. Each flip shortens
// the tour, so this terminates; with no three points collinear every remaining
// contact is a proper crossing.
void uncross(std::vector<Point>& ring) {
  const std::size_t n = ring.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        if (segments_properly_cross(ring[i], ring[i + 1], ring[j], ring[(j + 1) % n])) {
          std::reverse(ring.begin() + static_cast<std::ptrdiff_t>(i) + 1, ring.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
    }
  }
}

bool strictly_convex(const Ring& ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i)
    if (orient_sign(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) <= 0) return false;
  return true;
}

Ring convex_hole(std::mt19937_64& rng, std::size_t j, double cx, double cy, double radius) {
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  Ring ring;
  for (std::size_t i = 0; i < j; ++i) {
    const double angle = 2 * std::numbers::pi * (static_cast<double>(i) + 0.5 + jitter(rng)) / static_cast<double>(j);
    ring.emplace_back(std::lround(cx + radius * std::cos(angle)), std::lround(cy + radius * std::sin(angle)));
  }
  return ring;
}

std::optional<PolygonWithHoles> try_validate(std::vector<Ring> rings) {
  try {
    return validate(std::move(rings));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace

PolygonWithHoles generate(const GeneratorConfig& config) {
  if (config.outer_vertices < 3 || config.hole_vertices < 3 || config.coordinate_range < 2)
    throw std::invalid_argument("generator needs >= 3 outer and hole vertices and a range >= 2");
  std::mt19937_64 rng(config.seed);
  const long range = config.coordinate_range;
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int outer_try = 0; outer_try < kOuterAttempts; ++outer_try) {
    std::vector<Point> pts;
    try {
      pts = general_position_points(rng, config.outer_vertices, range);
    } catch (const GenerationFailed&) {
      throw GenerationFailed("range too small for " + std::to_string(config.outer_vertices) +
                                 " points in general position (seed " + std::to_string(config.seed) + ")",
                             config.seed);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    uncross(pts);
    std::vector<Ring> rings{pts};
    auto base = try_validate(rings);
    if (!base) continue;

    const double min_radius = std::max(1.5, static_cast<double>(config.hole_vertices) / 2.0);
    double max_radius = std::max(min_radius, static_cast<double>(range) / 8.0);
    int failures = 0;
    while (rings.size() < config.holes + 1 && failures < kHoleAttempts) {
      const double radius = min_radius + unit(rng) * (max_radius - min_radius);
      const double cx = radius + unit(rng) * (static_cast<double>(range) - 2 * radius);
      const double cy = radius + unit(rng) * (static_cast<double>(range) - 2 * radius);
      Ring hole = convex_hole(rng, config.hole_vertices, cx, cy, radius);
      bool ok = strictly_convex(hole);
      if (ok) {
        rings.push_back(hole);
        ok = try_validate(rings).has_value();
        if (!ok) rings.pop_back();
      }
      if (!ok && ++failures % 50 == 0) max_radius = std::max(min_radius, max_radius * 0.7);
    }
    if (rings.size() == config.holes + 1) return *try_validate(std::move(rings));
  }
  throw GenerationFailed("no valid polygon after bounded rejection rounds (seed " + std::to_string(config.seed) + ")",
                         config.seed);
}

}  // namespace vguard
