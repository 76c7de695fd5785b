#ifndef CURVESKETCH_GEOMETRY_HPP
#define CURVESKETCH_GEOMETRY_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace curvesketch {

/// Absolute tolerance for geometric predicates, in domain units.
inline constexpr double kGeomTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {}

  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point2& o) const { return x == o.x && y == o.y; }

  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

inline double cross(const Point2& a, const Point2& b) {
  return a.x * b.y - a.y * b.x;
}

/// Rotate by -90 degrees (clockwise). The unit normal of a directed
/// segment a->b is perp_cw(b - a) normalized; sign semantics everywhere
/// in this library inherit that convention.
inline Point2 perp_cw(const Point2& v) { return {v.y, -v.x}; }

inline Point2 normalized(const Point2& v) {
  double n = v.norm();
  if (n <= 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {v.x / n, v.y / n};
}

/// Directed segment a -> b. Requires positive length.
struct Segment {
  Point2 a;
  Point2 b;

  Segment(const Point2& a_, const Point2& b_) : a(a_), b(b_) {
    if ((b - a).norm_sq() <= 0.0)
      throw std::invalid_argument("degenerate segment");
  }

  Point2 direction() const { return normalized(b - a); }
  Point2 normal() const { return normalized(perp_cw(b - a)); }
  double length() const { return (b - a).norm(); }

  /// Clamped projection parameter of q onto the segment, in [0,1].
  double project(const Point2& q) const {
    double t = dot(q - a, b - a) / (b - a).norm_sq();
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return t;
  }

  Point2 point_at(double t) const { return a + (b - a) * t; }

  double distance(const Point2& q) const {
    return (q - point_at(project(q))).norm();
  }

  /// Signed distance from q to the supporting line, positive on the
  /// normal (clockwise) side.
  double signed_line_distance(const Point2& q) const {
    return dot(normal(), q - a);
  }
};

/// Minimum distance between two segments.
inline double segment_segment_distance(const Segment& s, const Segment& t) {
  // Intersecting segments have distance zero.
  Point2 d1 = s.b - s.a, d2 = t.b - t.a;
  double c1 = cross(d1, t.a - s.a), c2 = cross(d1, t.b - s.a);
  double c3 = cross(d2, s.a - t.a), c4 = cross(d2, s.b - t.a);
  if (((c1 < 0.0 && c2 > 0.0) || (c1 > 0.0 && c2 < 0.0)) &&
      ((c3 < 0.0 && c4 > 0.0) || (c3 > 0.0 && c4 < 0.0)))
    return 0.0;
  double d = s.distance(t.a);
  d = std::min(d, s.distance(t.b));
  d = std::min(d, t.distance(s.a));
  d = std::min(d, t.distance(s.b));
  return d;
}

struct Rect {
  double xmin = 0.0, ymin = 0.0, xmax = 1.0, ymax = 1.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double diameter() const { return std::hypot(width(), height()); }
  Point2 center() const { return {(xmin + xmax) / 2, (ymin + ymax) / 2}; }
  bool contains(const Point2& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
};

}  // namespace curvesketch

#endif  // CURVESKETCH_GEOMETRY_HPP
