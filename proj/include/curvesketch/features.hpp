#ifndef CURVESKETCH_FEATURES_HPP
#define CURVESKETCH_FEATURES_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "curvesketch/geometry.hpp"
#include "curvesketch/polyline.hpp"

namespace curvesketch {

/// Raised when q-p falls outside the normal cone of the vertex it was
/// reported to minimize -- impossible for a true argmin.
struct ConeViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Variant { Signed, MinDist };

inline std::string variant_name(Variant v) {
  return v == Variant::Signed ? "signed" : "minDist";
}

enum class LandmarkProvenance { ExplicitList, Grid };

struct LandmarkSet {
  std::vector<Point2> points;
  LandmarkProvenance provenance = LandmarkProvenance::ExplicitList;
  Rect domain;       // grid only
  int nx = 0, ny = 0;  // grid only

  std::size_t size() const { return points.size(); }

  std::string id() const {
    if (provenance == LandmarkProvenance::Grid)
      return "grid:" + std::to_string(nx) + "x" + std::to_string(ny) + ":[" +
             std::to_string(domain.xmin) + "," + std::to_string(domain.ymin) +
             "," + std::to_string(domain.xmax) + "," +
             std::to_string(domain.ymax) + "]";
    return "explicit:" + std::to_string(points.size());
  }
};

struct SketchConfig {
  double sigma = 1.0;        // ignored for MinDist
  Variant variant = Variant::Signed;
  LandmarkSet landmarks;

  std::string identity() const {
    return variant_name(variant) + ":" +
           (variant == Variant::Signed ? std::to_string(sigma) : "-") + ":" +
           landmarks.id();
  }
};

struct FeatureVector {
  std::vector<double> values;
  std::string config_id;
  std::string curve_id;
};

/// Normal cone at a critical vertex, resolved against a query point.
/// incoming_normal/outgoing_normal are the adjacent segment normals as
/// oriented by the curve (endpoint rule: the missing side is the negated
/// present normal). side records which of the two antipodal arcs of the
/// cone contains q-p: +1 for the arc swept from incoming to outgoing
/// normal, -1 for its mirror. theta is measured from the side-facing
/// incoming normal.
struct NormalConeQuery {
  Point2 incoming_normal;
  Point2 outgoing_normal;
  double alpha = 0.0;
  double theta = 0.0;
  int side = +1;
};

namespace detail {

inline double clamped_acos(double c) {
  return std::acos(std::clamp(c, -1.0, 1.0));
}

inline constexpr double kAngleTol = 1e-7;

}  // namespace detail

/// Build the normal cone query for a vertex that is the argmin for q.
inline NormalConeQuery vertex_normal_cone(const Polyline& curve,
                                          std::size_t vertex_index,
                                          const Point2& q) {
  const Point2& p = curve.vertices()[vertex_index];
  Point2 u = q - p;
  double d = u.norm();
  if (d <= 0.0) throw std::invalid_argument("vertex_normal_cone: q == vertex");
  u = u * (1.0 / d);

  NormalConeQuery cone;
  bool endpoint = curve.is_endpoint_vertex(vertex_index);
  if (endpoint) {
    Segment adj = curve.segment(vertex_index == 0 ? 0 : vertex_index - 1);
    Point2 w = adj.normal();
    Point2 dir = adj.direction();
    // Wedge beyond the end: for c_0 the foot clamps with <u,dir> <= 0,
    // for c_n with <u,dir> >= 0.
    double along = dot(u, dir);
    bool ok = (vertex_index == 0) ? along <= detail::kAngleTol
                                  : along >= -detail::kAngleTol;
    if (!ok) throw ConeViolation("q-p outside endpoint normal cone");
    cone.incoming_normal = w;
    cone.outgoing_normal = w * -1.0;
    cone.alpha = M_PI;
    cone.side = dot(u, w) >= 0.0 ? +1 : -1;
    cone.theta = detail::clamped_acos(dot(u, w * static_cast<double>(cone.side)));
    return cone;
  }

  Segment in = curve.segment(curve.incoming_segment(vertex_index));
  Segment out = curve.segment(curve.outgoing_segment(vertex_index));
  Point2 w_in = in.normal(), w_out = out.normal();
  cone.incoming_normal = w_in;
  cone.outgoing_normal = w_out;
  cone.alpha = detail::clamped_acos(dot(w_in, w_out));

  // Wedge membership: the vertex is the argmin only when the foot clamps
  // on both adjacent segments.
  if (dot(u, in.direction()) < -detail::kAngleTol ||
      dot(u, out.direction()) > detail::kAngleTol)
    throw ConeViolation("q-p outside vertex normal cone");

  if (cone.alpha >= M_PI - detail::kAngleTol) {
    // Cusp: the cone spans a half circle on either side of the line.
    cone.side = dot(u, w_in) >= 0.0 ? +1 : -1;
  } else {
    cone.side = dot(u, w_in) + dot(u, w_out) >= 0.0 ? +1 : -1;
  }
  double c = dot(u, w_in * static_cast<double>(cone.side));
  cone.theta = detail::clamped_acos(c);
  if (cone.theta > cone.alpha + detail::kAngleTol)
    throw ConeViolation("theta exceeds cone angle");
  cone.theta = std::min(cone.theta, cone.alpha);
  return cone;
}

/// Sign of <n_p(q), q-p> with n_p(q) the inner-product-maximizing unit
/// vector of the normal cone. Constant across each antipodal arc of the
/// cone, so it equals the resolved side.
inline int sign_at_vertex(const NormalConeQuery& cone) {
  if (cone.alpha <= detail::kAngleTol)
    throw std::domain_error(
        "sign_at_vertex: degenerate cone, use the regular-point path");
  return cone.side;
}

/// The signed feature value v_q^sigma(curve).
inline double signed_feature(const Polyline& curve, const Point2& q,
                             double sigma, double tol = kGeomTol) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  ClosestPointResult cp = closest_point(curve, q);
  double d = cp.distance;
  if (d <= tol) return 0.0;
  double gauss = std::exp(-(d * d) / (sigma * sigma));

  switch (cp.locus) {
    case Locus::SegmentInterior:
      return cp.perp_signed * gauss / sigma;
    case Locus::InteriorVertex: {
      NormalConeQuery cone = vertex_normal_cone(curve, cp.segment_index, q);
      int s;
      if (cone.alpha <= detail::kAngleTol) {
        // Collinear vertex: regular point, segment-case sign.
        s = dot(q - cp.point, cone.incoming_normal) >= 0.0 ? +1 : -1;
      } else {
        s = sign_at_vertex(cone);
      }
      return s * d * gauss / sigma;
    }
    case Locus::Endpoint: {
      std::size_t v = cp.segment_index;
      Segment adj = curve.segment(v == 0 ? 0 : v - 1);
      Point2 tangent = adj.direction();
      Point2 n_p = perp_cw(tangent);
      Point2 u = q - cp.point;
      double l1 = std::abs(dot(u, n_p)) + std::abs(dot(u, tangent));
      return dot(n_p, u * (1.0 / d)) * l1 * gauss / sigma;
    }
  }
  return 0.0;  // unreachable
}

inline double mindist_feature(const Polyline& curve, const Point2& q) {
  return closest_point(curve, q).distance;
}

/// Sketch one curve against every landmark, in landmark order.
inline FeatureVector sketch(const Polyline& curve, const SketchConfig& config,
                            const std::string& curve_id = "") {
  if (config.landmarks.size() == 0)
    throw std::invalid_argument("sketch: empty landmark set");
  FeatureVector fv;
  fv.config_id = config.identity();
  fv.curve_id = curve_id;
  fv.values.reserve(config.landmarks.size());
  for (const Point2& q : config.landmarks.points)
    fv.values.push_back(config.variant == Variant::Signed
                            ? signed_feature(curve, q, config.sigma)
                            : mindist_feature(curve, q));
  return fv;
}

/// Sketch a batch of curves, optionally across threads. Output order is
/// deterministic and identical to the single-threaded path.
inline std::vector<FeatureVector> sketch_all(
    const std::vector<Polyline>& curves, const SketchConfig& config,
    const std::vector<std::string>& ids, unsigned threads = 1) {
  std::vector<FeatureVector> out(curves.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < curves.size(); i += stride)
      out[i] = sketch(curves[i], config, i < ids.size() ? ids[i] : "");
  };
  if (threads <= 1 || curves.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return out;
}

/// Evaluate the signed field on an nx-by-ny grid of cell centers over the
/// domain, row-major from the bottom row up.
inline std::vector<double> field_raster(const Polyline& curve,
                                        const Rect& domain, int nx, int ny,
                                        double sigma) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("field_raster: bad grid");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Point2 q{domain.xmin + (i + 0.5) * domain.width() / nx,
               domain.ymin + (j + 0.5) * domain.height() / ny};
      grid.push_back(signed_feature(curve, q, sigma));
    }
  return grid;
}

}  // namespace curvesketch

#endif  // CURVESKETCH_FEATURES_HPP
