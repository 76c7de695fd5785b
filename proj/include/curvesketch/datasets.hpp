#ifndef CURVESKETCH_DATASETS_HPP
#define CURVESKETCH_DATASETS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvesketch/features.hpp"
#include "curvesketch/geometry.hpp"
#include "curvesketch/polyline.hpp"
#include "curvesketch/rng.hpp"

namespace curvesketch {

struct LabeledCurve {
  Polyline curve;
  std::string label;
  std::string id;
};

/// Synthetic directional dataset: trajectories crossing a long corridor in
/// one of two directions, identical vertex distributions per class.
struct DirectionalSpec {
  int n_per_class = 100;
  Rect a_box{-1.0, -1.0, 1.0, 1.0};
  Rect b_box{98.0, -1.0, 99.0, 1.0};
  // Intermediate box i (i = 1..98) is [i, i+1] x [-5, 5].
  double mid_ymin = -5.0, mid_ymax = 5.0;
  int mid_count = 98;
  std::uint64_t seed = 0;
};

namespace detail {

inline Point2 draw_in(Rng& rng, const Rect& r) {
  return {rng.uniform(r.xmin, r.xmax), rng.uniform(r.ymin, r.ymax)};
}

}  // namespace detail

/// Generate the two classes: AB curves traverse the boxes in increasing
/// order, BA curves in decreasing order with independent draws. Curve k
/// uses PRNG stream k, so output is byte-identical for a fixed seed.
inline std::vector<LabeledCurve> gen_directional(const DirectionalSpec& spec) {
  std::vector<LabeledCurve> out;
  out.reserve(2 * static_cast<std::size_t>(spec.n_per_class));
  for (int k = 0; k < 2 * spec.n_per_class; ++k) {
    bool forward = k < spec.n_per_class;
    Rng rng = Rng::stream(spec.seed, static_cast<std::uint64_t>(k));
    std::vector<Point2> v;
    v.reserve(spec.mid_count + 2);
    v.push_back(detail::draw_in(rng, forward ? spec.a_box : spec.b_box));
    for (int i = 1; i <= spec.mid_count; ++i) {
      int box = forward ? i : spec.mid_count + 1 - i;
      Rect r{static_cast<double>(box), spec.mid_ymin,
             static_cast<double>(box + 1), spec.mid_ymax};
      v.push_back(detail::draw_in(rng, r));
    }
    v.push_back(detail::draw_in(rng, forward ? spec.b_box : spec.a_box));
    out.push_back({Polyline(std::move(v)), forward ? "AB" : "BA",
                   (forward ? "ab_" : "ba_") +
                       std::to_string(forward ? k : k - spec.n_per_class)});
  }
  return out;
}

/// Axis-aligned affine map and its record, for normalizing curves into the
/// unit square and mapping back.
struct UnitTransform {
  Rect source;
  double sx = 1.0, sy = 1.0;

  Point2 apply(const Point2& p) const {
    return {(p.x - source.xmin) * sx, (p.y - source.ymin) * sy};
  }
  Point2 invert(const Point2& p) const {
    return {p.x / sx + source.xmin, p.y / sy + source.ymin};
  }
};

inline std::pair<std::vector<Polyline>, UnitTransform> normalize_to_unit(
    const std::vector<Polyline>& curves) {
  if (curves.empty())
    throw std::invalid_argument("normalize_to_unit: no curves");
  Rect bb{std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const auto& c : curves)
    for (const auto& p : c.vertices()) {
      bb.xmin = std::min(bb.xmin, p.x);
      bb.ymin = std::min(bb.ymin, p.y);
      bb.xmax = std::max(bb.xmax, p.x);
      bb.ymax = std::max(bb.ymax, p.y);
    }
  UnitTransform t;
  t.source = bb;
  t.sx = bb.width() > 0.0 ? 1.0 / bb.width() : 1.0;
  t.sy = bb.height() > 0.0 ? 1.0 / bb.height() : 1.0;
  std::vector<Polyline> mapped;
  mapped.reserve(curves.size());
  for (const auto& c : curves) {
    std::vector<Point2> v;
    v.reserve(c.vertex_count());
    for (const auto& p : c.vertices()) v.push_back(t.apply(p));
    mapped.emplace_back(std::move(v), c.closed());
  }
  return {std::move(mapped), t};
}

/// nx-by-ny landmark grid at cell centers, row-major from the bottom row.
inline LandmarkSet grid_landmarks(const Rect& domain, int nx, int ny) {
  if (nx < 1 || ny < 1)
    throw std::invalid_argument("grid_landmarks: grid must be >= 1x1");
  LandmarkSet set;
  set.provenance = LandmarkProvenance::Grid;
  set.domain = domain;
  set.nx = nx;
  set.ny = ny;
  set.points.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      set.points.push_back({domain.xmin + (i + 0.5) * domain.width() / nx,
                            domain.ymin + (j + 0.5) * domain.height() / ny});
  return set;
}

}  // namespace curvesketch

#endif  // CURVESKETCH_DATASETS_HPP
