#include <doctest.h>

#include <cmath>

#include "rotset/torus.hpp"

using namespace rotset;

namespace {

RectangleChart demo_chart() {
  RectangleChart c;
  c.domain = {{0.05, 0.05}, {0.95, 0.95}};
  c.rectangles = {{{0.2, 0.2}, {0.4, 0.4}}, {{0.6, 0.6}, {0.8, 0.8}}};
  c.displacements = {{0, 0}, {1, 0}};
  return c;
}

}  // namespace

TEST_CASE("lifts commute with integer translations") {
  for (const TorusLift& lift : {TorusLift(TranslationLift{{1.0 / 3, 0.5}}), TorusLift(StandardLift{}), demo_lift()}) {
    CHECK(periodicity_defect(lift) <= 1e-12);
  }
}

TEST_CASE("phi_n basics") {
  const TorusLift t(TranslationLift{{1.0 / 3, 0.5}});
  const Vec2 v = phi_n(t, {0.3, 0.7}, 100);
  CHECK(std::abs(v.x - 1.0 / 3) <= 1e-12);
  CHECK(std::abs(v.y - 0.5) <= 1e-12);
  const TorusLift id(TranslationLift{});
  CHECK(phi_n(id, {0.1, 0.2}, 10) == Vec2{});
  const TorusLift st(StandardLift{});
  CHECK(phi_n(st, {0.0, 0.0}, 1) == Vec2{});
  CHECK_THROWS_AS(phi_n(st, {0, 0}, 0), Error);
  const TorusLift wild(TranslationLift{{1e308, 0}});
  CHECK_THROWS_AS(phi_n(wild, {0, 0}, 10), Error);
}

TEST_CASE("orbit records are consistent") {
  const OrbitRecord r = orbit(TorusLift(StandardLift{}), {0.13, 0.71}, 200);
  CHECK(r.iterates.size() == 201);
  CHECK(r.means.size() == 200);
  const Vec2 direct = (r.iterates.back() - r.start) / 200.0;
  CHECK(norm(direct - r.means.back()) <= 1e-12);
  CHECK(norm(direct - r.accumulated_mean) <= 1e-9);
}

TEST_CASE("displacement bounds and the Cauchy check") {
  CHECK(*TorusLift(StandardLift{}).displacement_bound() == doctest::Approx(std::sqrt(2.0) / 4));
  const auto grid = unit_grid(16);
  CHECK(grid.size() == 256);
  for (const TorusLift& lift : {TorusLift(TranslationLift{{0.25, -0.5}}), TorusLift(StandardLift{}), demo_lift()}) {
    const CauchyReport c = cauchy_check(lift, grid, 300);
    CHECK(c.pass);
    CHECK(c.max_ratio <= 1.0);
  }
  const CauchyReport id = cauchy_check(TorusLift(TranslationLift{}), grid, 50);
  CHECK(id.pass);
  CHECK(id.k_constant == 0.0);
}

TEST_CASE("serial and parallel clouds are identical") {
  const TorusLift lift(StandardLift{0.3, 0.2});
  const auto starts = unit_grid(12);
  CHECK(kernels::phi_cloud_serial(lift, starts, 150) == kernels::phi_cloud_parallel(lift, starts, 150));
}

TEST_CASE("rotation set estimates") {
  const RotationEstimate t = estimate_rotation_set(TorusLift(TranslationLift{{1.0 / 3, 0.5}}), 8, 100);
  CHECK(t.cloud.size() == 64);
  CHECK(t.hull.size() == 1);
  CHECK(t.diameter <= 1e-12);
  const RotationEstimate s = estimate_rotation_set(TorusLift(StandardLift{}), 8, 1000);
  CHECK(s.diameter > 0.0);
  CHECK_THROWS_AS(estimate_rotation_set(TorusLift(StandardLift{}), 1, 10), Error);
}

TEST_CASE("float hull") {
  const auto h = float_hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}, {0.5, 0}});
  CHECK(h.size() == 4);
  CHECK(float_hull({{0.2, 0.2}, {0.2, 0.2}}).size() == 1);
}

TEST_CASE("chart validation and location") {
  RectangleChart c = demo_chart();
  CHECK_NOTHROW(validate_chart(c));
  CHECK(c.d_s() == doctest::Approx(std::sqrt(0.08)));
  const auto hit = locate(c, {2.3, -0.7});
  REQUIRE(hit);
  CHECK(hit->first == 0);
  CHECK(hit->second == IntVec2{2, -1});
  CHECK_FALSE(locate(c, {0.5, 0.5}));

  RectangleChart overlap = c;
  overlap.rectangles[1] = {{0.3, 0.3}, {0.5, 0.5}};
  CHECK_THROWS_AS(validate_chart(overlap), Error);
  RectangleChart wide = c;
  wide.domain = {{0.0, 0.0}, {1.0, 0.5}};
  CHECK_THROWS_AS(validate_chart(wide), Error);
}

TEST_CASE("rotational chart checks") {
  const RectangleChart c = demo_chart();
  CHECK(verify_rotational_chart(demo_lift(), c, 21).pass);

  RectangleChart wrong = c;
  wrong.displacements[1] = {0, 0};
  CHECK_FALSE(verify_rotational_chart(demo_lift(), wrong, 21).pass);

  RectangleChart edge;
  edge.domain = {{0.05, 0.05}, {0.95, 0.95}};
  edge.rectangles = {{{0.7, 0.4}, {0.9, 0.6}}};
  edge.displacements = {{0, 0}};
  CHECK_FALSE(verify_rotational_chart(TorusLift(TranslationLift{{0.5, 0.0}}), edge, 5).pass);

  RectangleChart integer = edge;
  integer.displacements = {{1, -2}};
  CHECK(verify_rotational_chart(TorusLift(TranslationLift{{1.0, -2.0}}), integer, 5).pass);
}

TEST_CASE("itineraries and the displacement bound") {
  const RectangleChart c = demo_chart();
  const Itinerary fixed = itinerary(demo_lift(), c, {0.3, 0.3}, 40);
  CHECK(fixed.steps_valid == 40);
  CHECK(fixed.word == Word(40, 0));
  const Itinerary shifted = itinerary(demo_lift(), c, {0.7, 0.7}, 40);
  CHECK(shifted.word == Word(40, 1));
  CHECK_THROWS_AS(itinerary(demo_lift(), c, {0.5, 0.5}, 5), Error);

  const Itinerary exits = itinerary(TorusLift(TranslationLift{{0.5, 0.0}}), c, {0.3, 0.3}, 5);
  CHECK(exits.steps_valid == 1);

  const DisplacementReport d = check_displacement_bound(demo_lift(), c, {0.7, 0.7}, 50);
  CHECK(d.pass);
  CHECK(d.max_residual <= 1e-12);
  CHECK_THROWS_AS(check_displacement_bound(TorusLift(TranslationLift{{0.5, 0.0}}), c, {0.3, 0.3}, 3), Error);

  const SegmentSweep s = displacement_sweep(demo_lift(), c, 11, 50);
  CHECK(s.pass);
  CHECK(s.segments == 2 * 121);
  CHECK(s.longest == 50);
}
