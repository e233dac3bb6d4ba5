#include "rotset/io.hpp"

#include <fstream>
#include <sstream>

namespace rotset::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) parse_fail(what + " must be an integer");
  return j.get<std::int64_t>();
}

double as_double(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return rational_from_json(j).to_double();
  parse_fail(what + " must be a number or a \"p/q\" string");
}

Vec2 vec_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) parse_fail(what + " must be a pair");
  return {as_double(j[0], what), as_double(j[1], what)};
}

Box box_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) parse_fail(what + " must be [[x0, y0], [x1, y1]]");
  return {vec_from_json(j[0], what), vec_from_json(j[1], what)};
}

json box_to_json(const Box& b) { return json::array({json::array({b.lo.x, b.lo.y}), json::array({b.hi.x, b.hi.y})}); }

double param(const json& params, const char* key, double fallback) {
  if (!params.contains(key)) return fallback;
  return as_double(params.at(key), key);
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path.string());
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const SftSystem& sys) {
  json disp = json::array();
  for (const auto& s : sys.displacements) disp.push_back(json::array({s.x, s.y}));
  return {{"alphabet", sys.alphabet_size}, {"transitions", sys.transitions}, {"displacements", disp}};
}

SftSystem system_from_json(const json& j) {
  const auto alphabet = as_int(field(j, "alphabet"), "alphabet");
  const json& tr = field(j, "transitions");
  const json& ds = field(j, "displacements");
  if (!tr.is_array() || !ds.is_array()) parse_fail("transitions and displacements must be arrays");
  std::vector<std::vector<Symbol>> transitions;
  for (const auto& row : tr) {
    if (!row.is_array()) parse_fail("each transition entry must be an array");
    std::vector<Symbol> succ;
    for (const auto& s : row) succ.push_back(static_cast<Symbol>(as_int(s, "successor")));
    transitions.push_back(std::move(succ));
  }
  std::vector<IntVec2> displacements;
  for (const auto& d : ds) {
    if (!d.is_array() || d.size() != 2) parse_fail("each displacement must be [x, y]");
    displacements.push_back({as_int(d[0], "displacement"), as_int(d[1], "displacement")});
  }
  SftSystem sys = make_system(std::move(transitions), std::move(displacements));
  sys.alphabet_size = static_cast<int>(alphabet);
  return sys;
}

json to_json(const Rational2& p) { return json::array({p.x.str(), p.y.str()}); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) parse_fail("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Rational2 point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) parse_fail("point must be a pair");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

json to_json(const RationalPolygon& poly) {
  json verts = json::array();
  for (const auto& v : poly.vertices()) verts.push_back(to_json(v));
  return {{"tag", to_string(poly.tag())}, {"vertices", verts}};
}

RationalPolygon polygon_from_json(const json& j) {
  const json& verts = field(j, "vertices");
  if (!verts.is_array() || verts.empty()) parse_fail("vertices must be a non-empty array");
  std::vector<Rational2> pts;
  for (const auto& v : verts) pts.push_back(point_from_json(v));
  RationalPolygon poly = RationalPolygon::hull(pts);
  if (poly.vertices() != pts) parse_fail("polygon vertices are not in canonical order");
  const json& tag = field(j, "tag");
  if (!tag.is_string() || tag.get<std::string>() != to_string(poly.tag())) parse_fail("polygon tag mismatch");
  return poly;
}

json to_json(const Cycle& c) { return {{"word", c.word}, {"length", c.length()}, {"simple", c.simple}}; }

json to_json(const Decomposition& d) {
  json cycles = json::array();
  for (const auto& c : d.cycles) cycles.push_back(c.word);
  return {{"cycles", cycles}, {"remainder", d.remainder}, {"source_length", d.source_length}};
}

json to_json(const OracleComparison& c) {
  json lengths = json::array();
  for (const auto& l : c.per_length) {
    lengths.push_back({{"n", l.n},
                       {"means", l.mean_count},
                       {"max_distance_sq", l.max_distance_sq.str()},
                       {"bound_sq", l.bound_sq.str()},
                       {"pass", l.pass}});
  }
  json witnesses = json::array();
  for (const auto& w : c.polygon.witnesses) witnesses.push_back(w.word);
  return {{"polygon", to_json(c.polygon.polygon)},
          {"witnesses", witnesses},
          {"oracle_hull", to_json(c.oracle)},
          {"contained", c.contained},
          {"realized", c.realized},
          {"equal", c.equal},
          {"equality_required", c.equality_required},
          {"equal_from", c.equal_from},
          {"distance_bounds", lengths},
          {"pass", c.pass}};
}

json to_json(const Checkpoint& c) {
  return {{"n", c.n},
          {"a_n", c.a_n.str()},
          {"S", c.mean.str()},
          {"bound", c.bound.str()},
          {"pass", c.pass},
          {"delta_pass", c.delta_pass}};
}

json to_json(const WindowReport& r) {
  json j = {{"pass", r.pass},
            {"word_length", r.word_length},
            {"window", r.window},
            {"scan_length", r.scan_length},
            {"windows_checked", r.windows_checked},
            {"occurrences", r.occurrences}};
  j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
  j["min_sufficient_window"] = r.min_sufficient_window ? json(*r.min_sufficient_window) : json(nullptr);
  return j;
}

json to_json(const RotationPointsReport& r) {
  return {{"horizon", r.horizon},
          {"stride", r.stride},
          {"points", r.points.size()},
          {"min", r.min.str()},
          {"max", r.max.str()},
          {"min_point", to_json(r.min_point)},
          {"max_point", to_json(r.max_point)},
          {"epsilon", r.epsilon.str()},
          {"epsilon_sq_target", r.epsilon_sq_target.str()},
          {"dense", r.dense},
          {"degenerate", r.degenerate}};
}

json to_json(const TorusLift& lift) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, TranslationLift>) {
          return {{"family", "translation"}, {"params", {{"v", json::array({f.v.x, f.v.y})}}}};
        } else if constexpr (std::is_same_v<T, StandardLift>) {
          return {{"family", "standard"}, {"params", {{"a", f.a}, {"b", f.b}}}};
        } else {
          return {{"family", "shear_pair"},
                  {"params",
                   {{"shift", f.shift},
                    {"rise", json::array({f.rise_begin, f.rise_end})},
                    {"fall", json::array({f.fall_begin, f.fall_end})},
                    {"amp", f.amp},
                    {"bump_center", f.bump_center},
                    {"bump_half_width", f.bump_half_width}}}};
        }
      },
      lift.family());
}

TorusLift lift_from_json(const json& j) {
  const json& fam = field(j, "family");
  if (!fam.is_string()) parse_fail("family must be a string");
  const std::string name = fam.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) parse_fail("params must be an object");
  if (name == "translation") return TorusLift(TranslationLift{vec_from_json(field(params, "v"), "v")});
  if (name == "standard") return TorusLift(StandardLift{param(params, "a", 0.25), param(params, "b", 0.25)});
  if (name == "shear_pair") {
    ShearPairLift f;
    f.shift = param(params, "shift", f.shift);
    if (params.contains("rise")) {
      const Vec2 r = vec_from_json(params.at("rise"), "rise");
      f.rise_begin = r.x;
      f.rise_end = r.y;
    }
    if (params.contains("fall")) {
      const Vec2 r = vec_from_json(params.at("fall"), "fall");
      f.fall_begin = r.x;
      f.fall_end = r.y;
    }
    f.amp = param(params, "amp", f.amp);
    f.bump_center = param(params, "bump_center", f.bump_center);
    f.bump_half_width = param(params, "bump_half_width", f.bump_half_width);
    if (!(f.rise_begin < f.rise_end && f.rise_end <= f.fall_begin && f.fall_begin < f.fall_end &&
          f.fall_end - 1.0 <= f.rise_begin && f.bump_half_width > 0.0 && f.bump_half_width <= 0.5)) {
      parse_fail("shear_pair profile parameters are inconsistent");
    }
    return TorusLift(f);
  }
  parse_fail("unknown lift family '" + name + "'");
}

json to_json(const RectangleChart& chart) {
  json rects = json::array();
  for (std::size_t i = 0; i < chart.rectangles.size(); ++i) {
    rects.push_back({{"rect", box_to_json(chart.rectangles[i])},
                     {"s", json::array({chart.displacements[i].x, chart.displacements[i].y})}});
  }
  return {{"domain", box_to_json(chart.domain)}, {"rectangles", rects}};
}

RectangleChart chart_from_json(const json& j) {
  RectangleChart chart;
  chart.domain = box_from_json(field(j, "domain"), "domain");
  const json& rects = field(j, "rectangles");
  if (!rects.is_array()) parse_fail("rectangles must be an array");
  for (const auto& r : rects) {
    chart.rectangles.push_back(box_from_json(field(r, "rect"), "rect"));
    const json& s = field(r, "s");
    if (!s.is_array() || s.size() != 2) parse_fail("s must be [i, j]");
    chart.displacements.push_back({as_int(s[0], "s"), as_int(s[1], "s")});
  }
  return chart;
}

std::string cloud_csv(const RotationEstimate& est) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y,phi_x,phi_y\n";
  for (std::size_t i = 0; i < est.cloud.size(); ++i) {
    os << est.starts[i].x << ',' << est.starts[i].y << ',' << est.cloud[i].x << ',' << est.cloud[i].y << '\n';
  }
  return os.str();
}

}  // namespace rotset::io
