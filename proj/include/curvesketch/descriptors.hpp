#ifndef CURVESKETCH_DESCRIPTORS_HPP
#define CURVESKETCH_DESCRIPTORS_HPP

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvesketch/features.hpp"
#include "curvesketch/polyline.hpp"

namespace curvesketch {

struct SlfsEstimate {
  double value = std::numeric_limits<double>::infinity();
  std::optional<std::pair<Point2, Point2>> witness;
  double sample_step = 0.0;

  bool finite() const { return std::isfinite(value); }
};

namespace detail {

struct CurveSample {
  Point2 point;
  Point2 normal;
};

/// Regular points at arclength spacing <= step, offset to segment-interior
/// midpoints so vertices are never sampled.
inline std::vector<CurveSample> sample_regular_points(const Polyline& curve,
                                                      double step) {
  std::vector<CurveSample> samples;
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    Segment s = curve.segment(i);
    auto m = static_cast<std::size_t>(std::ceil(s.length() / step));
    Point2 n = s.normal();
    for (std::size_t k = 0; k < m; ++k)
      samples.push_back({s.point_at((k + 0.5) / m), n});
  }
  return samples;
}

}  // namespace detail

/// Sampled estimate of the signed local feature size: the minimum distance
/// between regular points whose normals satisfy the opposing-sign condition
/// and whose connecting open segment misses the curve. Upper-biased;
/// converges as step -> 0. O(m^2) in the sample count.
inline SlfsEstimate slfs_estimate(const Polyline& curve, double step,
                                  double tol = kGeomTol) {
  if (!(step > 0.0))
    throw std::invalid_argument("slfs_estimate: step must be > 0");
  auto samples = detail::sample_regular_points(curve, step);
  SlfsEstimate est;
  est.sample_step = step;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      Point2 diff = samples[i].point - samples[j].point;
      double d = diff.norm();
      if (d >= est.value || d <= tol) continue;
      double prod = dot(samples[i].normal, diff) *
                    dot(samples[j].normal, diff * -1.0);
      if (prod >= -tol * tol) continue;
      if (segment_intersects(Segment(samples[i].point, samples[j].point),
                             curve, tol))
        continue;
      est.value = d;
      est.witness = {samples[i].point, samples[j].point};
    }
  }
  return est;
}

namespace detail {

/// Sign of the feature at a candidate closest point (s_p in
/// n_p(q) = s_p (q-p)/||q-p||).
inline int candidate_sign(const Polyline& curve, const Point2& q,
                          const ClosestPointResult& cp) {
  if (cp.locus == Locus::SegmentInterior)
    return cp.perp_signed >= 0.0 ? +1 : -1;
  if (cp.locus == Locus::Endpoint) {
    std::size_t v = cp.segment_index;
    Segment adj = curve.segment(v == 0 ? 0 : v - 1);
    return dot(perp_cw(adj.direction()), q - cp.point) >= 0.0 ? +1 : -1;
  }
  try {
    NormalConeQuery cone = vertex_normal_cone(curve, cp.segment_index, q);
    if (cone.alpha <= kAngleTol)
      return dot(q - cp.point, cone.incoming_normal) >= 0.0 ? +1 : -1;
    return sign_at_vertex(cone);
  } catch (const ConeViolation&) {
    Segment in = curve.segment(curve.incoming_segment(cp.segment_index));
    return dot(in.normal(), q - cp.point) >= 0.0 ? +1 : -1;
  }
}

}  // namespace detail

/// Signed medial axis membership: q has at least two closest points whose
/// query normals oppose along the connecting direction.
inline bool sma_membership(const Polyline& curve, const Point2& q,
                           double tol = kGeomTol) {
  struct Cand {
    ClosestPointResult cp;
    int sign;
  };
  double min_d = std::numeric_limits<double>::infinity();
  std::vector<ClosestPointResult> near;
  std::size_t n = curve.vertex_count();
  for (std::size_t i = 0; i < curve.segment_count(); ++i) {
    Segment s = curve.segment(i);
    double t = s.project(q);
    ClosestPointResult cp;
    cp.point = s.point_at(t);
    cp.distance = (q - cp.point).norm();
    if (t > 0.0 && t < 1.0) {
      cp.locus = Locus::SegmentInterior;
      cp.segment_index = i;
      cp.perp_signed = s.signed_line_distance(q);
    } else {
      std::size_t v = (t <= 0.0) ? i : (i + 1) % n;
      cp.point = curve.vertices()[v];
      cp.segment_index = v;
      cp.locus = curve.is_endpoint_vertex(v) ? Locus::Endpoint
                                             : Locus::InteriorVertex;
    }
    min_d = std::min(min_d, cp.distance);
    near.push_back(cp);
  }
  if (!(min_d > tol)) return false;  // q on the curve

  std::vector<Cand> cands;
  for (const auto& cp : near) {
    if (cp.distance > min_d + tol) continue;
    bool dup = false;
    for (const auto& c : cands)
      if ((c.cp.point - cp.point).norm() <= 2.0 * tol) dup = true;
    if (dup) continue;
    cands.push_back({cp, detail::candidate_sign(curve, q, cp)});
  }
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const Point2& p1 = cands[i].cp.point;
      const Point2& p2 = cands[j].cp.point;
      Point2 u1 = normalized(q - p1), u2 = normalized(q - p2);
      double prod = cands[i].sign * dot(u1, p1 - p2) * cands[j].sign *
                    dot(u2, p2 - p1);
      if (prod < -tol * tol) return true;
    }
  return false;
}

/// Scale selection satisfying the finite-slfs stability hypothesis:
/// sigma = delta / (4 (1 + sqrt(ln(2/epsilon)))).
inline double sigma_select(double delta, double epsilon) {
  if (!(delta > 0.0)) throw std::invalid_argument("sigma_select: delta <= 0");
  if (!(epsilon > 0.0 && epsilon < 2.0))
    throw std::invalid_argument("sigma_select: epsilon must be in (0,2)");
  if (!(epsilon <= delta / 4.0))
    throw std::invalid_argument("sigma_select: epsilon must be <= delta/4");
  return delta / (4.0 * (1.0 + std::sqrt(std::log(2.0 / epsilon))));
}

}  // namespace curvesketch

#endif  // CURVESKETCH_DESCRIPTORS_HPP
