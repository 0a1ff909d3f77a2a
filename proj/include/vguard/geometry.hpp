#pragma once

// Exact rational geometry kernel. Every predicate here is decided with GMP
// rationals; nothing is ever rounded.

#include <gmpxx.h>

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vguard {

using Scalar = mpq_class;

/// Parses an integer ("-3"), an exact decimal ("-0.5", "2.25") or a fraction
/// ("-1/2"). Throws std::invalid_argument on anything else.
Scalar parse_scalar(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {}
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::string to_string(const Point& p);

/// Point at parameter t on segment ab (a + t(b - a)).
Point lerp(const Point& a, const Point& b, const Scalar& t);

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of (q - p) x (r - p).
Orientation orient(const Point& p, const Point& q, const Point& r);

inline int orient_sign(const Point& p, const Point& q, const Point& r) {
  return static_cast<int>(orient(p, q, r));
}

/// Closed-segment membership. Throws DegenerateSegment when a == b.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// True iff the open segments ab and cd meet in exactly one point interior to
/// both. Throws DegenerateSegment on a degenerate input segment.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Closed triangle membership for a counter-clockwise triangle abc.
bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

/// Whether the ray apex->target lies in the closed wedge swept counter-clockwise
/// from apex->from to apex->to. Coincident directions are on the wedge boundary.
bool in_closed_wedge(const Point& apex, const Point& from, const Point& to, const Point& target);

/// Twice the signed area (shoelace). Positive for counter-clockwise rings.
Scalar twice_signed_area(std::span<const Point> ring);

using Ring = std::vector<Point>;

enum class RegionPosition { Inside, Boundary, Outside };

const char* to_string(RegionPosition position);

/// Classifies p against the region bounded by `rings` (outer ring first, holes
/// after, or any closed walks whose crossing parity defines the region).
RegionPosition classify_point(std::span<const Ring> rings, const Point& p);

/// True iff every point of segment pq lies in the closed region bounded by
/// `rings`. Contact with the boundary (touching, grazing through vertices,
/// running along edges) is allowed. Throws DegenerateSegment when p == q.
bool segment_in_rings(std::span<const Ring> rings, const Point& p, const Point& q);

}  // namespace vguard
