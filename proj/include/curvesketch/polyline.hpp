#ifndef CURVESKETCH_POLYLINE_HPP
#define CURVESKETCH_POLYLINE_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesketch/geometry.hpp"

namespace curvesketch {

enum class Locus { SegmentInterior, InteriorVertex, Endpoint };

struct ClosestPointResult {
  Point2 point;
  std::size_t segment_index = 0;  // for vertex loci: index of the vertex
  Locus locus = Locus::SegmentInterior;
  double distance = 0.0;
  // Signed line distance, defined only for SegmentInterior.
  double perp_signed = 0.0;
};

/// Oriented piecewise-linear curve, open or closed. Orientation is the
/// vertex order. Closed curves carry an implicit wrap segment last->first.
class Polyline {
 public:
  Polyline(std::vector<Point2> vertices, bool closed = false)
      : vertices_(std::move(vertices)), closed_(closed) {
    validate();
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::size_t segment_count() const {
    return closed_ ? vertices_.size() : vertices_.size() - 1;
  }

  Segment segment(std::size_t i) const {
    std::size_t n = vertices_.size();
    return Segment(vertices_[i], vertices_[(i + 1) % n]);
  }

  double length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < segment_count(); ++i)
      total += segment(i).length();
    return total;
  }

  bool is_endpoint_vertex(std::size_t v) const {
    return !closed_ && (v == 0 || v + 1 == vertices_.size());
  }

  /// Index of the segment entering vertex v; for an open curve's first
  /// vertex there is none and segment 0 is returned (callers handle the
  /// endpoint rule separately).
  std::size_t incoming_segment(std::size_t v) const {
    if (v > 0) return v - 1;
    return closed_ ? segment_count() - 1 : 0;
  }

  std::size_t outgoing_segment(std::size_t v) const {
    if (v < segment_count()) return v;
    return closed_ ? 0 : segment_count() - 1;
  }

 private:
  void validate() const {
    std::size_t n = vertices_.size();
    if (closed_ ? n < 3 : n < 2)
      throw std::invalid_argument("polyline: too few vertices");
    for (const auto& p : vertices_)
      if (!p.finite())
        throw std::invalid_argument("polyline: non-finite vertex");
    std::size_t m = closed_ ? n : n - 1;
    for (std::size_t i = 0; i < m; ++i)
      if ((vertices_[(i + 1) % n] - vertices_[i]).norm_sq() <= 0.0)
        throw std::invalid_argument("polyline: zero-length segment");
  }

  std::vector<Point2> vertices_;
  bool closed_;
};

/// Global closest point on the curve to q. Ties at exact equidistance are
/// broken deterministically: lowest segment index wins, and within a tie a
/// segment-interior locus is preferred over a vertex locus.
inline ClosestPointResult closest_point(const Polyline& curve,
                                        const Point2& q) {
  ClosestPointResult best;
  best.distance = std::numeric_limits<double>::infinity();
  std::size_t n = curve.vertex_count();

  const double tie_tol = 1e-12;
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    Segment s = curve.segment(i);
    double t = s.project(q);
    Point2 foot = s.point_at(t);
    double d = (q - foot).norm();

    ClosestPointResult cand;
    cand.point = foot;
    cand.distance = d;
    if (t > 0.0 && t < 1.0) {
      cand.locus = Locus::SegmentInterior;
      cand.segment_index = i;
      cand.perp_signed = s.signed_line_distance(q);
    } else {
      std::size_t v = (t <= 0.0) ? i : (i + 1) % n;
      cand.point = curve.vertices()[v];
      cand.segment_index = v;
      cand.locus = curve.is_endpoint_vertex(v) ? Locus::Endpoint
                                               : Locus::InteriorVertex;
    }

    double margin = tie_tol * (1.0 + best.distance);
    if (!std::isfinite(best.distance) || d < best.distance - margin) {
      best = cand;
    } else if (d <= best.distance + margin) {
      // Tie: prefer interior locus; otherwise keep the earlier candidate.
      if (best.locus != Locus::SegmentInterior &&
          cand.locus == Locus::SegmentInterior)
        best = cand;
    }
  }
  return best;
}

/// Insert vertices so that no segment is longer than step. Image,
/// orientation, open/closed flag and original vertices are preserved.
inline Polyline densify(const Polyline& curve, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("densify: step must be > 0");
  std::vector<Point2> out;
  std::size_t m = curve.segment_count();
  for (std::size_t i = 0; i < m; ++i) {
    Segment s = curve.segment(i);
    out.push_back(s.a);
    auto pieces = static_cast<std::size_t>(std::ceil(s.length() / step));
    for (std::size_t k = 1; k < pieces; ++k)
      out.push_back(s.point_at(static_cast<double>(k) / pieces));
  }
  if (!curve.closed()) out.push_back(curve.vertices().back());
  return Polyline(std::move(out), curve.closed());
}

inline Polyline reverse(const Polyline& curve) {
  std::vector<Point2> v(curve.vertices().rbegin(), curve.vertices().rend());
  return Polyline(std::move(v), curve.closed());
}

/// True iff the open interior of s comes within tol of the curve. The
/// interior is taken as s shrunk at both ends, so a segment touching the
/// curve only at its own endpoints does not intersect.
inline bool segment_intersects(const Segment& s, const Polyline& curve,
                               double tol = kGeomTol) {
  double len = s.length();
  double margin = std::min(8.0 * tol, 0.25 * len);
  Point2 d = s.direction();
  Segment inner(s.a + d * margin, s.b - d * margin);
  for (std::size_t i = 0; i < curve.segment_count(); ++i)
    if (segment_segment_distance(inner, curve.segment(i)) <= tol) return true;
  return false;
}

}  // namespace curvesketch

#endif  // CURVESKETCH_POLYLINE_HPP
