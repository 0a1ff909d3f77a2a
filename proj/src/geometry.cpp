#include "vguard/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "vguard/errors.hpp"

namespace vguard {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Scratch registers for the cross product; orient() sits in every hot loop and
// gmpxx temporaries would otherwise allocate on each call.
struct CrossScratch {
  mpq_t a, b, c, d;
  CrossScratch() {
    mpq_init(a);
    mpq_init(b);
    mpq_init(c);
    mpq_init(d);
  }
  ~CrossScratch() {
    mpq_clear(a);
    mpq_clear(b);
    mpq_clear(c);
    mpq_clear(d);
  }
  CrossScratch(const CrossScratch&) = delete;
  CrossScratch& operator=(const CrossScratch&) = delete;
};

void require_segment(const Point& a, const Point& b) {
  if (a == b) throw DegenerateSegment("degenerate segment at " + to_string(a));
}

bool between(const Scalar& v, const Scalar& lo, const Scalar& hi) {
  return lo <= hi ? (lo <= v && v <= hi) : (hi <= v && v <= lo);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Scalar value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash);
    const auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Scalar(n, d);
    value.canonicalize();
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    mpz_class digits(std::string(whole) + std::string(frac) + (whole.empty() && frac.empty() ? "0" : ""), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Scalar(digits, scale);
    value.canonicalize();
  } else {
    if (!all_digits(body)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    value = Scalar(mpz_class(std::string(body), 10));
  }
  return negative ? Scalar(-value) : value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Point lerp(const Point& a, const Point& b, const Scalar& t) {
  return Point(Scalar(a.x + t * (b.x - a.x)), Scalar(a.y + t * (b.y - a.y)));
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
  thread_local CrossScratch s;
  mpq_sub(s.a, q.x.get_mpq_t(), p.x.get_mpq_t());
  mpq_sub(s.b, r.y.get_mpq_t(), p.y.get_mpq_t());
  mpq_sub(s.c, q.y.get_mpq_t(), p.y.get_mpq_t());
  mpq_sub(s.d, r.x.get_mpq_t(), p.x.get_mpq_t());
  mpq_mul(s.a, s.a, s.b);
  mpq_mul(s.c, s.c, s.d);
  const int sign = mpq_cmp(s.a, s.c);
  return sign > 0 ? Orientation::CounterClockwise : sign < 0 ? Orientation::Clockwise : Orientation::Collinear;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  require_segment(a, b);
  return between(p.x, a.x, b.x) && between(p.y, a.y, b.y) && orient(a, b, p) == Orientation::Collinear;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  require_segment(a, b);
  require_segment(c, d);
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  return orient_sign(a, b, p) >= 0 && orient_sign(b, c, p) >= 0 && orient_sign(c, a, p) >= 0;
}

bool in_closed_wedge(const Point& apex, const Point& from, const Point& to, const Point& target) {
  const int span = orient_sign(apex, from, to);
  const int left_of_from = orient_sign(apex, from, target);
  const int right_of_to = orient_sign(apex, target, to);
  if (span > 0) return left_of_from >= 0 && right_of_to >= 0;
  if (span < 0) return !(left_of_from < 0 && right_of_to < 0);
  // from and to are collinear with apex.
  const bool same_direction = (from.x - apex.x) * (to.x - apex.x) + (from.y - apex.y) * (to.y - apex.y) > 0;
  if (same_direction) return true;
  return left_of_from >= 0;
}

Scalar twice_signed_area(std::span<const Point> ring) {
  Scalar sum = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

const char* to_string(RegionPosition position) {
  switch (position) {
    case RegionPosition::Inside: return "Inside";
    case RegionPosition::Boundary: return "Boundary";
    case RegionPosition::Outside: return "Outside";
  }
  return "?";
}

RegionPosition classify_point(std::span<const Ring> rings, const Point& p) {
  bool inside = false;
  for (const Ring& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % n];
      if (on_segment(p, a, b)) return RegionPosition::Boundary;
      // Half-open rule on y so each vertex is counted once.
      const bool a_above = a.y > p.y;
      const bool b_above = b.y > p.y;
      if (a_above == b_above) continue;
      const int side = orient_sign(a, b, p);
      if ((b.y > a.y && side > 0) || (b.y < a.y && side < 0)) inside = !inside;
    }
  }
  return inside ? RegionPosition::Inside : RegionPosition::Outside;
}

bool segment_in_rings(std::span<const Ring> rings, const Point& p, const Point& q) {
  require_segment(p, q);
  const Scalar& min_x = p.x < q.x ? p.x : q.x;
  const Scalar& max_x = p.x < q.x ? q.x : p.x;
  const Scalar& min_y = p.y < q.y ? p.y : q.y;
  const Scalar& max_y = p.y < q.y ? q.y : p.y;
  const bool use_x = p.x != q.x;
  const Scalar span = use_x ? Scalar(q.x - p.x) : Scalar(q.y - p.y);
  auto param = [&](const Point& x) { return Scalar(((use_x ? x.x - p.x : x.y - p.y)) / span); };

  std::vector<Scalar> contacts{Scalar(0), Scalar(1)};
  for (const Ring& ring : rings) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % n];
      if ((a.x < min_x && b.x < min_x) || (a.x > max_x && b.x > max_x) || (a.y < min_y && b.y < min_y) ||
          (a.y > max_y && b.y > max_y))
        continue;
      const int oa = orient_sign(p, q, a);
      const int ob = orient_sign(p, q, b);
      if (oa != 0 && oa == ob) continue;
      if (oa == 0 && between(a.x, p.x, q.x) && between(a.y, p.y, q.y)) contacts.push_back(param(a));
      if (ob == 0 && between(b.x, p.x, q.x) && between(b.y, p.y, q.y)) contacts.push_back(param(b));
      if (oa != 0 && ob != 0) {
        const int op = orient_sign(a, b, p);
        const int oq = orient_sign(a, b, q);
        if (op != 0 && oq != 0 && op != oq) return false;
      }
    }
  }
  std::sort(contacts.begin(), contacts.end());
  contacts.erase(std::unique(contacts.begin(), contacts.end()), contacts.end());

  if (classify_point(rings, p) == RegionPosition::Outside) return false;
  if (classify_point(rings, q) == RegionPosition::Outside) return false;
  for (std::size_t i = 0; i + 1 < contacts.size(); ++i) {
    const Scalar mid = (contacts[i] + contacts[i + 1]) / 2;
    if (classify_point(rings, lerp(p, q, mid)) == RegionPosition::Outside) return false;
  }
  return true;
}

}  // namespace vguard
