#ifndef CURVESKETCH_DISTANCES_HPP
#define CURVESKETCH_DISTANCES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "curvesketch/features.hpp"
#include "curvesketch/polyline.hpp"

namespace curvesketch {

struct DistanceSpec {
  double p = 2.0;  // l^p exponent, may be infinity

  DistanceSpec() = default;
  explicit DistanceSpec(double p_) : p(p_) {
    if (!(p >= 1.0)) throw std::invalid_argument("DistanceSpec: p must be >= 1");
  }

  bool is_inf() const { return std::isinf(p); }
};

/// Normalized l^p distance between feature vectors sharing a config:
/// (1/n sum |u_i-v_i|^p)^(1/p) for finite p, max |u_i-v_i| for p = inf.
inline double d_Q(const FeatureVector& u, const FeatureVector& v,
                  const DistanceSpec& spec = DistanceSpec{}) {
  if (u.config_id != v.config_id)
    throw std::invalid_argument("d_Q: mismatched sketch configs");
  if (u.values.size() != v.values.size())
    throw std::invalid_argument("d_Q: length mismatch");
  std::size_t n = u.values.size();
  if (spec.is_inf()) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      m = std::max(m, std::abs(u.values[i] - v.values[i]));
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += std::pow(std::abs(u.values[i] - v.values[i]), spec.p);
  return std::pow(acc / n, 1.0 / spec.p);
}

struct HausdorffResult {
  double directed_12 = 0.0;
  double directed_21 = 0.0;
  double symmetric = 0.0;
};

namespace detail {

inline double directed_hausdorff(const Polyline& from, const Polyline& to,
                                 double step) {
  Polyline dense = densify(from, step);
  double worst = 0.0;
  for (const Point2& p : dense.vertices())
    worst = std::max(worst, closest_point(to, p).distance);
  return worst;
}

/// Discrete Frechet DP over two vertex sequences.
inline double dfd_sequences(const std::vector<Point2>& a,
                            const std::vector<Point2>& b) {
  std::size_t m = a.size(), n = b.size();
  std::vector<double> prev(n), cur(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = (a[0] - b[j]).norm();
    prev[j] = j == 0 ? d : std::max(prev[j - 1], d);
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = (a[i] - b[j]).norm();
      double best = prev[j];
      if (j > 0) best = std::min(best, std::min(prev[j - 1], cur[j - 1]));
      cur[j] = std::max(best, d);
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

inline std::vector<Point2> closed_walk(const std::vector<Point2>& v,
                                       std::size_t shift) {
  std::vector<Point2> w;
  w.reserve(v.size() + 1);
  for (std::size_t k = 0; k <= v.size(); ++k)
    w.push_back(v[(shift + k) % v.size()]);
  return w;
}

}  // namespace detail

/// Directed and symmetric Hausdorff distances, sampled on curves densified
/// to the given step. Underestimates the true value by at most step/2.
inline HausdorffResult hausdorff(const Polyline& c1, const Polyline& c2,
                                 double step) {
  if (!(step > 0.0)) throw std::invalid_argument("hausdorff: step must be > 0");
  HausdorffResult r;
  r.directed_12 = detail::directed_hausdorff(c1, c2, step);
  r.directed_21 = detail::directed_hausdorff(c2, c1, step);
  r.symmetric = std::max(r.directed_12, r.directed_21);
  return r;
}

/// Discrete Frechet distance over vertex sequences. Closed curves are
/// treated as cyclic walks, minimizing over the start shift of one curve.
/// d_F <= result <= d_F + max segment length.
inline double discrete_frechet(const Polyline& c1, const Polyline& c2) {
  if (!c1.closed() && !c2.closed())
    return detail::dfd_sequences(c1.vertices(), c2.vertices());
  const Polyline& fixed = c1.closed() && !c2.closed() ? c2 : c1;
  const Polyline& shifted = c1.closed() && !c2.closed() ? c1 : c2;
  std::vector<Point2> a = fixed.closed()
                              ? detail::closed_walk(fixed.vertices(), 0)
                              : fixed.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < shifted.vertex_count(); ++s)
    best = std::min(best,
                    detail::dfd_sequences(
                        a, detail::closed_walk(shifted.vertices(), s)));
  return best;
}

/// Dynamic time warping over vertex sequences: sum of squared Euclidean
/// distances along the optimal warping path, square-rooted.
inline double dtw(const Polyline& c1, const Polyline& c2) {
  const auto& a = c1.vertices();
  const auto& b = c2.vertices();
  std::size_t m = a.size(), n = b.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(n + 1, inf), cur(n + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = inf;
    for (std::size_t j = 1; j <= n; ++j) {
      double c = (a[i - 1] - b[j - 1]).norm_sq();
      cur[j] = c + std::min({prev[j], cur[j - 1], prev[j - 1]});
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[n]);
}

}  // namespace curvesketch

#endif  // CURVESKETCH_DISTANCES_HPP
