#include "rotset/polygon.hpp"

#include <algorithm>

namespace rotset {

const char* to_string(PolygonTag tag) noexcept {
  switch (tag) {
    case PolygonTag::Point: return "point";
    case PolygonTag::Segment: return "segment";
    case PolygonTag::Polygon: return "polygon";
  }
  return "unknown";
}

namespace {

// Generic monotone chain; drops collinear points. Input must be sorted and unique.
template <typename P, typename Cross>
std::vector<P> monotone_chain(const std::vector<P>& pts, Cross cross3) {
  if (pts.size() <= 2) return pts;
  std::vector<P> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross3(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross3(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // All points collinear: the chain degenerates to [first, last, first...].
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

Rational segment_distance_sq(const Rational2& p, const Rational2& a, const Rational2& b) {
  const Rational2 ab = b - a;
  const Rational len2 = norm_squared(ab);
  Rational t = dot(p - a, ab) / len2;
  if (t < Rational(0)) t = Rational(0);
  if (t > Rational(1)) t = Rational(1);
  return norm_squared(p - (a + t * ab));
}

}  // namespace

RationalPolygon RationalPolygon::hull(std::vector<Rational2> points) {
  if (points.empty()) throw Error(ErrorCode::Invalid, "hull of an empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  auto v = monotone_chain(points, [](const Rational2& a, const Rational2& b, const Rational2& c) {
    return orientation(a, b, c);
  });
  return RationalPolygon(std::move(v));
}

RationalPolygon RationalPolygon::from_canonical(std::vector<Rational2> vertices) {
  return RationalPolygon(std::move(vertices));
}

PolygonTag RationalPolygon::tag() const noexcept {
  if (vertices_.size() == 1) return PolygonTag::Point;
  if (vertices_.size() == 2) return PolygonTag::Segment;
  return PolygonTag::Polygon;
}

bool RationalPolygon::contains(const Rational2& p) const {
  if (vertices_.empty()) return false;
  if (vertices_.size() <= 2) return squared_distance(p).is_zero();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

Rational RationalPolygon::squared_distance(const Rational2& p) const {
  if (vertices_.empty()) throw Error(ErrorCode::Invalid, "distance to an empty polygon");
  if (vertices_.size() == 1) return norm_squared(p - vertices_[0]);
  if (vertices_.size() == 2) return segment_distance_sq(p, vertices_[0], vertices_[1]);
  if (contains(p)) return Rational(0);
  const std::size_t n = vertices_.size();
  Rational best = segment_distance_sq(p, vertices_[0], vertices_[1]);
  for (std::size_t i = 1; i < n; ++i) {
    best = std::min(best, segment_distance_sq(p, vertices_[i], vertices_[(i + 1) % n]));
  }
  return best;
}

Rational RationalPolygon::support(const Rational2& direction) const {
  if (vertices_.empty()) throw Error(ErrorCode::Invalid, "support of an empty polygon");
  Rational best = dot(direction, vertices_[0]);
  for (const auto& v : vertices_) best = std::max(best, dot(direction, v));
  return best;
}

RationalPolygon RationalPolygon::scaled(const Rational& k) const {
  std::vector<Rational2> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(k * v);
  return hull(std::move(pts));
}

RationalPolygon RationalPolygon::transformed(const IntMat2& L) const {
  std::vector<Rational2> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(L * v);
  return hull(std::move(pts));
}

bool polygon_subset(const RationalPolygon& inner, const RationalPolygon& outer) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Rational2& v) { return outer.contains(v); });
}

std::vector<IntVec2> integer_hull(std::vector<IntVec2> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return monotone_chain(points, [](IntVec2 a, IntVec2 b, IntVec2 c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                       static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
  });
}

}  // namespace rotset
