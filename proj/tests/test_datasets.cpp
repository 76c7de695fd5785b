#include <catch2/catch_amalgamated.hpp>

#include <curvesketch/datasets.hpp>

using namespace curvesketch;

TEST_CASE("directional dataset shape and labels") {
  DirectionalSpec spec;
  spec.n_per_class = 100;
  spec.seed = 42;
  auto curves = gen_directional(spec);
  REQUIRE(curves.size() == 200);
  int ab = 0, ba = 0;
  for (const auto& lc : curves) {
    CHECK(lc.curve.vertex_count() == 100);
    CHECK_FALSE(lc.curve.closed());
    (lc.label == "AB" ? ab : ba)++;
  }
  CHECK(ab == 100);
  CHECK(ba == 100);
  CHECK(curves[0].id == "ab_0");
  CHECK(curves[100].id == "ba_0");
  CHECK(curves[199].id == "ba_99");
}

TEST_CASE("directional dataset box membership") {
  DirectionalSpec spec;
  spec.n_per_class = 10;
  spec.seed = 3;
  auto curves = gen_directional(spec);
  for (const auto& lc : curves) {
    const auto& v = lc.curve.vertices();
    const Rect& first = lc.label == "AB" ? spec.a_box : spec.b_box;
    const Rect& last = lc.label == "AB" ? spec.b_box : spec.a_box;
    REQUIRE(first.contains(v.front()));
    REQUIRE(last.contains(v.back()));
    for (int i = 1; i <= spec.mid_count; ++i) {
      int box = lc.label == "AB" ? i : spec.mid_count + 1 - i;
      Rect r{static_cast<double>(box), spec.mid_ymin,
             static_cast<double>(box + 1), spec.mid_ymax};
      REQUIRE(r.contains(v[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("directional dataset is deterministic per seed and per curve") {
  DirectionalSpec spec;
  spec.n_per_class = 5;
  spec.seed = 99;
  auto a = gen_directional(spec);
  auto b = gen_directional(spec);
  for (std::size_t i = 0; i < a.size(); ++i)
    REQUIRE(a[i].curve.vertices() == b[i].curve.vertices());

  // Curve k does not depend on how many curves are generated.
  DirectionalSpec bigger = spec;
  bigger.n_per_class = 7;
  auto c = gen_directional(bigger);
  for (int k = 0; k < 5; ++k)
    REQUIRE(a[static_cast<std::size_t>(k)].curve.vertices() ==
            c[static_cast<std::size_t>(k)].curve.vertices());

  spec.seed = 100;
  auto d = gen_directional(spec);
  CHECK(a[0].curve.vertices() != d[0].curve.vertices());
}

TEST_CASE("backward curves are fresh draws, not reversals") {
  DirectionalSpec spec;
  spec.n_per_class = 3;
  spec.seed = 1;
  auto curves = gen_directional(spec);
  for (int k = 0; k < 3; ++k) {
    auto fwd = curves[static_cast<std::size_t>(k)].curve.vertices();
    auto bwd = curves[static_cast<std::size_t>(3 + k)].curve.vertices();
    std::reverse(bwd.begin(), bwd.end());
    CHECK(fwd != bwd);
  }
}

TEST_CASE("normalize_to_unit maps the joint bounding box to the unit square") {
  std::vector<Polyline> curves{Polyline({{0.0, -5.0}, {100.0, 5.0}}),
                               Polyline({{50.0, 0.0}, {60.0, 2.0}})};
  auto [mapped, t] = normalize_to_unit(curves);
  CHECK(mapped[0].vertices()[0] == Point2{0.0, 0.0});
  CHECK(mapped[0].vertices()[1] == Point2{1.0, 1.0});
  CHECK(t.sx == Catch::Approx(0.01));
  CHECK(t.sy == Catch::Approx(0.1));

  // Round trip.
  for (std::size_t c = 0; c < curves.size(); ++c)
    for (std::size_t i = 0; i < curves[c].vertex_count(); ++i) {
      Point2 back = t.invert(mapped[c].vertices()[i]);
      REQUIRE((back - curves[c].vertices()[i]).norm() <= 1e-12);
    }
}

TEST_CASE("normalize_to_unit identity on the unit square") {
  std::vector<Polyline> curves{Polyline({{0.0, 0.0}, {1.0, 1.0}})};
  auto [mapped, t] = normalize_to_unit(curves);
  CHECK(mapped[0].vertices()[0] == Point2{0.0, 0.0});
  CHECK(mapped[0].vertices()[1] == Point2{1.0, 1.0});
  CHECK(t.sx == 1.0);
  CHECK(t.sy == 1.0);
  CHECK_THROWS_AS(normalize_to_unit({}), std::invalid_argument);
}

TEST_CASE("grid landmarks at cell centers, row-major from the bottom") {
  auto one = grid_landmarks(Rect{0.0, 0.0, 2.0, 4.0}, 1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one.points[0] == Point2{1.0, 2.0});

  auto four = grid_landmarks(Rect{0.0, 0.0, 1.0, 1.0}, 2, 2);
  REQUIRE(four.size() == 4);
  CHECK(four.points[0] == Point2{0.25, 0.25});
  CHECK(four.points[1] == Point2{0.75, 0.25});
  CHECK(four.points[2] == Point2{0.25, 0.75});
  CHECK(four.points[3] == Point2{0.75, 0.75});

  CHECK(grid_landmarks(Rect{0.0, 0.0, 1.0, 1.0}, 7, 3).size() == 21);
  CHECK_THROWS_AS(grid_landmarks(Rect{}, 0, 2), std::invalid_argument);
}

TEST_CASE("grid landmark ids encode provenance") {
  auto g = grid_landmarks(Rect{0.0, 0.0, 1.0, 1.0}, 2, 2);
  CHECK(g.id().substr(0, 8) == "grid:2x2");
  LandmarkSet ex;
  ex.points = {{0.0, 0.0}};
  CHECK(ex.id() == "explicit:1");
}
