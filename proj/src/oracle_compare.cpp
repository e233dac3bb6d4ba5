#include "rotset/oracle_compare.hpp"

#include <algorithm>

namespace rotset {

OracleComparison compare_with_oracle(const SftSystem& sys, int n_max, std::uint64_t cap) {
  OracleComparison out;
  out.trimmed = trim_to_biextendable(sys).system;
  const SftSystem& t = out.trimmed;
  check_word_cap(t, n_max, cap);
  out.polygon = rotation_polygon_witnessed(t);
  const RationalPolygon& poly = out.polygon.polygon;

  std::int64_t s_max_sq = 0;
  for (const auto& s : t.displacements) s_max_sq = std::max(s_max_sq, dot(s, s));
  const std::int64_t a = t.alphabet_size;

  const auto all = kernels::word_sums_by_length_parallel(t, n_max, WordClass::All);
  const auto periodic = kernels::word_sums_by_length_parallel(t, n_max, WordClass::Periodic);

  std::vector<Rational2> union_pts;
  bool distances_ok = true;
  for (int n = 1; n <= n_max; ++n) {
    const auto idx = static_cast<std::size_t>(n - 1);
    OracleLengthCheck check;
    check.n = n;
    check.mean_count = all[idx].size();
    check.bound_sq = Rational(4 * a * a * s_max_sq, static_cast<std::int64_t>(n) * n);
    for (const auto& s : all[idx]) {
      check.max_distance_sq = std::max(check.max_distance_sq, poly.squared_distance({Rational(s.x, n), Rational(s.y, n)}));
    }
    check.pass = check.max_distance_sq <= check.bound_sq;
    distances_ok = distances_ok && check.pass;
    out.per_length.push_back(check);

    for (const auto& s : integer_hull(periodic[idx])) union_pts.push_back({Rational(s.x, n), Rational(s.y, n)});
    if (!union_pts.empty()) {
      auto hull = RationalPolygon::hull(union_pts);
      union_pts = hull.vertices();
      if (out.equal_from == 0 && hull == poly) out.equal_from = n;
      if (n == n_max) out.oracle = std::move(hull);
    }
  }
  if (union_pts.empty()) throw Error(ErrorCode::NoCycles, "no periodic word of length <= " + std::to_string(n_max));

  out.contained = polygon_subset(out.oracle, poly);
  out.equal = out.oracle == poly;

  out.realized = true;
  std::size_t longest = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Rational2& v = poly.vertices()[i];
    const std::size_t len = out.polygon.witnesses[i].length();
    longest = std::max(longest, len);
    for (std::size_t n = len; n <= static_cast<std::size_t>(n_max); n += len) {
      const Rational k(static_cast<std::int64_t>(n));
      const Rational2 target = k * v;
      const IntVec2 psi_target{target.x.num(), target.y.num()};
      const auto& level = periodic[n - 1];
      out.realized = out.realized && target.x.den() == 1 && target.y.den() == 1 &&
                     std::binary_search(level.begin(), level.end(), psi_target);
    }
  }
  out.equality_required = static_cast<std::size_t>(n_max) >= longest;
  out.pass = out.contained && out.realized && distances_ok && (!out.equality_required || out.equal);
  return out;
}

}  // namespace rotset
