#include <doctest.h>

#include <random>

#include "rotset/io.hpp"
#include "support.hpp"

using namespace rotset;
using namespace rotset::testing;

TEST_CASE("systems round-trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const SftSystem sys = random_system(rng, 5, 9);
    const auto text = io::dump(io::to_json(sys));
    CHECK(io::system_from_json(io::json::parse(text)) == sys);
  }
  const SftSystem full2 = io::system_from_json(io::read_json(data_path("full2.json")));
  CHECK(full2 == full_shift({{0, 0}, {1, 0}}));
}

TEST_CASE("polygons round-trip and reject non-canonical input") {
  const auto poly = RationalPolygon::hull({{Rational(1, 3), Rational(0)}, {Rational(0), Rational(-2, 7)}, {Rational(1), Rational(1)}});
  const io::json j = io::to_json(poly);
  CHECK(j["tag"] == "polygon");
  CHECK(j["vertices"][0][1] == "-2/7");
  CHECK(io::polygon_from_json(j) == poly);

  io::json reversed = j;
  std::reverse(reversed["vertices"].begin(), reversed["vertices"].end());
  CHECK_THROWS_AS(io::polygon_from_json(reversed), Error);
  io::json mistagged = j;
  mistagged["tag"] = "segment";
  CHECK_THROWS_AS(io::polygon_from_json(mistagged), Error);

  const auto seg = io::to_json(RationalPolygon::hull({{Rational(0), Rational(0)}, {Rational(1), Rational(0)}}));
  CHECK(seg.dump() == R"({"tag":"segment","vertices":[["0/1","0/1"],["1/1","0/1"]]})");
}

TEST_CASE("charts and lifts round-trip") {
  const RectangleChart chart = io::chart_from_json(io::read_json(data_path("demo_chart.json")));
  CHECK(chart.rectangles.size() == 2);
  CHECK(io::chart_from_json(io::json::parse(io::dump(io::to_json(chart)))) == chart);

  const TorusLift demo = io::lift_from_json(io::read_json(data_path("demo_lift.json")));
  CHECK(demo == demo_lift());
  CHECK(io::lift_from_json(io::to_json(demo)) == demo);
  const TorusLift t = io::lift_from_json(io::read_json(data_path("translation.json")));
  CHECK(std::get<TranslationLift>(t.family()).v.x == 1.0 / 3);
  CHECK(io::lift_from_json(io::to_json(t)) == t);
  CHECK_THROWS_AS(io::lift_from_json(io::json{{"family", "twist"}}), Error);
}

TEST_CASE("malformed input is a parse error") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Invalid;
  };
  CHECK(code_of([] { io::system_from_json(io::json{{"alphabet", 2}}); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::system_from_json(io::json::parse(R"({"alphabet":1,"transitions":[[0.5]],"displacements":[[0,0]]})")); }) ==
        ErrorCode::Parse);
  CHECK(code_of([] { io::read_json("/nonexistent/file.json"); }) == ErrorCode::Parse);
  CHECK(code_of([] { io::point_from_json(io::json::array({"1/2"})); }) == ErrorCode::Parse);
}

TEST_CASE("report serialization is deterministic") {
  const ApParams p = ap_params(Rational(3, 10), 4);
  const auto cps = checkpoint_bounds(p, 3);
  const io::json j = io::to_json(cps[2]);
  CHECK(j["a_n"] == "32");
  CHECK(j["S"] == "3/32");
  CHECK(j["bound"] == "1/8");
  const auto density = symbolic_rotation_points(p, full_shift({{0, 0}, {1, 0}}), 512, 1);
  CHECK(io::dump(io::to_json(density)) == io::dump(io::to_json(density)));
  CHECK(io::to_json(density)["epsilon"] == "3/64");

  const RotationEstimate est = estimate_rotation_set(TorusLift(StandardLift{}), 4, 10);
  const std::string csv = io::cloud_csv(est);
  CHECK(csv.rfind("x,y,phi_x,phi_y\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);
  CHECK(io::cloud_svg(est).find("<svg") == 0);
  CHECK(io::polygon_svg(RationalPolygon::hull({{Rational(1, 2), Rational(0)}})).find("(1/2, 0/1)") != std::string::npos);
}
