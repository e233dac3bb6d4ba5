#pragma once

#include <span>
#include <string>
#include <vector>

#include "rotset/rational.hpp"
#include "rotset/sft.hpp"

namespace rotset {

enum class PolygonTag { Point, Segment, Polygon };

const char* to_string(PolygonTag tag) noexcept;

/// Exact convex polygon with rational vertices, possibly degenerate.
///
/// Vertices are pairwise distinct, in counterclockwise order and start at the
/// lexicographic minimum; no three retained vertices are collinear. A point
/// has one vertex and a segment two, so two polygons are equal exactly when
/// their vertex lists are.
class RationalPolygon {
 public:
  RationalPolygon() = default;

  /// Monotone-chain hull, all orientation tests exact. Throws Invalid on an empty input.
  static RationalPolygon hull(std::vector<Rational2> points);
  /// Trusts that `vertices` are already canonical (used by the parser after validation).
  static RationalPolygon from_canonical(std::vector<Rational2> vertices);

  const std::vector<Rational2>& vertices() const noexcept { return vertices_; }
  PolygonTag tag() const noexcept;
  std::size_t size() const noexcept { return vertices_.size(); }

  bool contains(const Rational2& p) const;
  /// Exact squared Euclidean distance from p to the polygon (zero inside).
  Rational squared_distance(const Rational2& p) const;
  /// max over the polygon of <direction, x>.
  Rational support(const Rational2& direction) const;

  RationalPolygon scaled(const Rational& k) const;
  RationalPolygon transformed(const IntMat2& L) const;

  friend bool operator==(const RationalPolygon&, const RationalPolygon&) = default;

 private:
  explicit RationalPolygon(std::vector<Rational2> v) : vertices_(std::move(v)) {}
  std::vector<Rational2> vertices_;
};

/// True iff every point of `inner` lies in `outer`.
bool polygon_subset(const RationalPolygon& inner, const RationalPolygon& outer);

/// Hull of integer points, returned in the same canonical order (exact, int64).
std::vector<IntVec2> integer_hull(std::vector<IntVec2> points);

}  // namespace rotset
