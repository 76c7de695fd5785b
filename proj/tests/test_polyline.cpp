#include <catch2/catch_amalgamated.hpp>

#include <curvesketch/polyline.hpp>
#include <curvesketch/rng.hpp>

using namespace curvesketch;

namespace {

Polyline unit_square() {
  return Polyline({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}, true);
}

Polyline random_polyline(Rng& rng, int n) {
  std::vector<Point2> v;
  Point2 p{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
  v.push_back(p);
  for (int i = 1; i < n; ++i) {
    p = p + Point2{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3)};
    if ((p - v.back()).norm() < 1e-6) p.x += 0.05;
    v.push_back(p);
  }
  return Polyline(std::move(v));
}

}  // namespace

TEST_CASE("polyline validation") {
  CHECK_THROWS_AS(Polyline({{0.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Polyline({{0.0, 0.0}, {1.0, 0.0}}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(Polyline({{0.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
  double nan = std::nan("");
  CHECK_THROWS_AS(Polyline({{0.0, 0.0}, {nan, 1.0}}), std::invalid_argument);
}

TEST_CASE("closed curve wrap segment and vertex roles") {
  Polyline sq = unit_square();
  CHECK(sq.segment_count() == 4);
  Segment wrap = sq.segment(3);
  CHECK(wrap.a == Point2{0.0, 1.0});
  CHECK(wrap.b == Point2{0.0, 0.0});
  for (std::size_t v = 0; v < 4; ++v) CHECK_FALSE(sq.is_endpoint_vertex(v));
  CHECK(sq.incoming_segment(0) == 3);

  Polyline open({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}});
  CHECK(open.segment_count() == 2);
  CHECK(open.is_endpoint_vertex(0));
  CHECK(open.is_endpoint_vertex(2));
  CHECK_FALSE(open.is_endpoint_vertex(1));
}

TEST_CASE("closest point: perpendicular foot on a segment") {
  Polyline c({{-1.0, 0.0}, {1.0, 0.0}});
  auto r = closest_point(c, {0.0, 1.0});
  CHECK(r.point == Point2{0.0, 0.0});
  CHECK(r.locus == Locus::SegmentInterior);
  CHECK(r.distance == Catch::Approx(1.0));
  CHECK(r.perp_signed == Catch::Approx(-1.0));
}

TEST_CASE("closest point: beyond the segment end is an endpoint") {
  Polyline c({{-1.0, 0.0}, {1.0, 0.0}});
  auto r = closest_point(c, {2.0, 1.0});
  CHECK(r.point == Point2{1.0, 0.0});
  CHECK(r.locus == Locus::Endpoint);
  CHECK(r.distance == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("closest point: reflex-side corner is an interior vertex") {
  Polyline c({{0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}});
  auto r = closest_point(c, {-1.0, -1.0});
  CHECK(r.point == Point2{0.0, 0.0});
  CHECK(r.locus == Locus::InteriorVertex);
  CHECK(r.segment_index == 1);
  CHECK(r.distance == Catch::Approx(std::sqrt(2.0)));
}

TEST_CASE("closest point: vertex of a closed curve is never an endpoint") {
  Polyline sq = unit_square();
  auto r = closest_point(sq, {-1.0, -1.0});
  CHECK(r.locus == Locus::InteriorVertex);
  CHECK(r.point == Point2{0.0, 0.0});
}

TEST_CASE("closest point tie-break prefers the lowest index") {
  // Center of the square is equidistant from all four sides.
  auto r = closest_point(unit_square(), {0.5, 0.5});
  CHECK(r.segment_index == 0);
  CHECK(r.locus == Locus::SegmentInterior);
  CHECK(r.distance == Catch::Approx(0.5));
}

TEST_CASE("closest point distance is 1-Lipschitz in q") {
  Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    Polyline c = random_polyline(rng, 2 + t % 7);
    for (int i = 0; i < 50; ++i) {
      Point2 q1{rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)};
      Point2 q2 = q1 + Point2{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
      double d1 = closest_point(c, q1).distance;
      double d2 = closest_point(c, q2).distance;
      REQUIRE(std::abs(d1 - d2) <= (q1 - q2).norm() + 1e-12);
    }
  }
}

TEST_CASE("densify: exact examples") {
  Polyline c({{0.0, 0.0}, {1.0, 0.0}});
  auto d = densify(c, 0.5);
  REQUIRE(d.vertex_count() == 3);
  CHECK(d.vertices()[1] == Point2{0.5, 0.0});
  CHECK(densify(c, 2.0).vertex_count() == 2);

  auto sq = densify(unit_square(), 0.25);
  CHECK(sq.closed());
  CHECK(sq.segment_count() == 16);
  CHECK_THROWS_AS(densify(c, 0.0), std::invalid_argument);
}

TEST_CASE("densify preserves the image and distances") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Polyline c = random_polyline(rng, 3 + t % 5);
    Polyline d = densify(c, 0.1);
    CHECK(d.length() == Catch::Approx(c.length()).margin(1e-12));
    for (int i = 0; i < 25; ++i) {
      Point2 q{rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)};
      REQUIRE(closest_point(d, q).distance ==
              Catch::Approx(closest_point(c, q).distance).margin(1e-12));
    }
  }
}

TEST_CASE("reverse: examples and involution") {
  Polyline c({{0.0, 0.0}, {1.0, 0.0}});
  CHECK(reverse(c).vertices()[0] == Point2{1.0, 0.0});

  Polyline tri({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, true);
  Polyline rt = reverse(tri);
  CHECK(rt.closed());
  CHECK(rt.vertices()[0] == Point2{0.0, 1.0});

  Polyline rr = reverse(reverse(tri));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(rr.vertices()[i] == tri.vertices()[i]);
}

TEST_CASE("reverse preserves closest-point distance") {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    Polyline c = random_polyline(rng, 2 + t % 6);
    Polyline r = reverse(c);
    for (int i = 0; i < 25; ++i) {
      Point2 q{rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 2.0)};
      REQUIRE(closest_point(c, q).distance ==
              Catch::Approx(closest_point(r, q).distance).margin(1e-12));
    }
  }
}

TEST_CASE("segment_intersects: crossing, clear, and endpoint-touch") {
  Polyline wall({{0.0, 0.0}, {0.0, 2.0}});
  CHECK(segment_intersects(Segment({-1.0, 1.0}, {1.0, 1.0}), wall, 1e-9));
  CHECK_FALSE(segment_intersects(Segment({-1.0, -1.0}, {1.0, -1.0}), wall, 1e-9));
  // Touching the curve only at the probe segment's own endpoints.
  CHECK_FALSE(segment_intersects(Segment({0.0, 1.0}, {3.0, 1.0}), wall, 1e-9));
}
