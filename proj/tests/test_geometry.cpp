#include <catch2/catch_amalgamated.hpp>

#include <curvesketch/geometry.hpp>
#include <curvesketch/rng.hpp>

using namespace curvesketch;

TEST_CASE("point arithmetic and norms") {
  Point2 a{3.0, 4.0};
  CHECK(a.norm() == Catch::Approx(5.0));
  CHECK(a.norm_sq() == Catch::Approx(25.0));
  CHECK((a - Point2{3.0, 4.0}).norm() == 0.0);
  CHECK((a * 2.0).x == 6.0);
  CHECK(dot(a, {1.0, 0.0}) == 3.0);
  CHECK(cross({1.0, 0.0}, {0.0, 1.0}) == 1.0);
}

TEST_CASE("clockwise perpendicular fixes the normal convention") {
  // Directed +x segment has normal -y.
  CHECK(perp_cw({1.0, 0.0}) == Point2{0.0, -1.0});
  CHECK(perp_cw({0.0, 1.0}) == Point2{1.0, 0.0});
}

TEST_CASE("normalized rejects the zero vector") {
  CHECK_THROWS_AS(normalized({0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("segment basics") {
  Segment s({0.0, 0.0}, {2.0, 0.0});
  CHECK(s.length() == 2.0);
  CHECK(s.direction() == Point2{1.0, 0.0});
  CHECK(s.normal() == Point2{0.0, -1.0});
  CHECK_THROWS_AS(Segment({1.0, 1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("projection clamps to the segment") {
  Segment s({0.0, 0.0}, {1.0, 0.0});
  CHECK(s.project({0.5, 3.0}) == Catch::Approx(0.5));
  CHECK(s.project({-2.0, 0.0}) == 0.0);
  CHECK(s.project({5.0, 1.0}) == 1.0);
  CHECK(s.distance({0.5, 2.0}) == Catch::Approx(2.0));
  CHECK(s.distance({2.0, 0.0}) == Catch::Approx(1.0));
}

TEST_CASE("signed line distance is positive on the clockwise side") {
  Segment s({-1.0, 0.0}, {1.0, 0.0});  // normal (0,-1)
  CHECK(s.signed_line_distance({0.0, 1.0}) == Catch::Approx(-1.0));
  CHECK(s.signed_line_distance({0.0, -2.0}) == Catch::Approx(2.0));
  CHECK(s.signed_line_distance({0.5, 0.0}) == Catch::Approx(0.0));
}

TEST_CASE("segment-segment distance") {
  Segment s({0.0, 0.0}, {1.0, 0.0});
  SECTION("crossing segments have distance zero") {
    CHECK(segment_segment_distance(s, Segment({0.5, -1.0}, {0.5, 1.0})) == 0.0);
  }
  SECTION("parallel segments") {
    CHECK(segment_segment_distance(s, Segment({0.0, 0.5}, {1.0, 0.5})) ==
          Catch::Approx(0.5));
  }
  SECTION("disjoint colinear segments") {
    CHECK(segment_segment_distance(s, Segment({2.0, 0.0}, {3.0, 0.0})) ==
          Catch::Approx(1.0));
  }
  SECTION("endpoint-to-interior case") {
    CHECK(segment_segment_distance(s, Segment({0.5, 0.25}, {0.5, 2.0})) ==
          Catch::Approx(0.25));
  }
}

TEST_CASE("rect geometry") {
  Rect r{0.0, 0.0, 3.0, 4.0};
  CHECK(r.width() == 3.0);
  CHECK(r.height() == 4.0);
  CHECK(r.diameter() == Catch::Approx(5.0));
  CHECK(r.center() == Point2{1.5, 2.0});
  CHECK(r.contains({3.0, 4.0}));
  CHECK_FALSE(r.contains({3.1, 0.0}));
}

TEST_CASE("rng streams are deterministic and decorrelated") {
  Rng a = Rng::stream(42, 3);
  Rng b = Rng::stream(42, 3);
  Rng c = Rng::stream(42, 4);
  bool differs = false;
  for (int i = 0; i < 16; ++i) {
    auto x = a.next_u64();
    CHECK(x == b.next_u64());
    if (x != c.next_u64()) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("rng uniforms stay in range") {
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    double u = r.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    double v = r.uniform(-2.0, 5.0);
    CHECK(v >= -2.0);
    CHECK(v < 5.0);
    CHECK(r.next_below(13) < 13);
  }
}
