#include "rotset/oracle.hpp"

#include <algorithm>
#include <functional>

#include <omp.h>

namespace rotset {

void check_word_cap(const SftSystem& sys, int n, std::uint64_t cap) {
  if (n < 1) throw Error(ErrorCode::Invalid, "word length must be positive");
  const auto a = static_cast<std::uint64_t>(sys.alphabet_size);
  std::uint64_t count = 1;
  for (int k = 0; k < n; ++k) {
    if (count > cap / std::max<std::uint64_t>(a, 1)) {
      throw Error(ErrorCode::CapExceeded, std::to_string(sys.alphabet_size) + "^" + std::to_string(n) +
                                              " words exceed the cap of " + std::to_string(cap));
    }
    count *= a;
  }
  if (count > cap) {
    throw Error(ErrorCode::CapExceeded, std::to_string(sys.alphabet_size) + "^" + std::to_string(n) +
                                            " words exceed the cap of " + std::to_string(cap));
  }
}

namespace kernels {

std::vector<IntVec2> word_sums_serial(const SftSystem& sys, int n, WordClass cls) {
  require_valid(sys);
  std::vector<IntVec2> sums;
  Word w;
  std::function<void(IntVec2)> extend = [&](IntVec2 sum) {
    if (static_cast<int>(w.size()) == n) {
      if (cls == WordClass::All || sys.admits(w.back(), w.front())) sums.push_back(sum);
      return;
    }
    for (Symbol s : sys.successors(w.back())) {
      w.push_back(s);
      extend(sum + sys.displacement(s));
      w.pop_back();
    }
  };
  for (Symbol s = 0; s < sys.alphabet_size; ++s) {
    w = {s};
    extend(sys.displacement(s));
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

namespace {

// Reachable (last symbol, psi) states for every word length 1..n_max, one
// bitmap per first symbol so the outer loop is embarrassingly parallel.
// Returns, per length, the sorted distinct psi values of the requested class.
std::vector<std::vector<IntVec2>> sweep(const SftSystem& sys, int n_max, WordClass cls) {
  require_valid(sys);
  if (n_max < 1) throw Error(ErrorCode::Invalid, "word length must be positive");
  const int a = sys.alphabet_size;

  // Partial sums of words of length <= n_max stay inside n_max * hull({0} U {s_i}).
  std::int64_t lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& s : sys.displacements) {
    lo_x = std::min(lo_x, s.x);
    hi_x = std::max(hi_x, s.x);
    lo_y = std::min(lo_y, s.y);
    hi_y = std::max(hi_y, s.y);
  }
  const std::int64_t width = n_max * (hi_x - lo_x) + 1;
  const std::int64_t height = n_max * (hi_y - lo_y) + 1;
  const auto cells = static_cast<std::size_t>(width * height);
  const std::int64_t origin_x = n_max * lo_x, origin_y = n_max * lo_y;
  // Within the box, adding s moves the flat index by a fixed offset.
  std::vector<std::int64_t> step(static_cast<std::size_t>(a));
  for (int s = 0; s < a; ++s) {
    step[static_cast<std::size_t>(s)] = sys.displacement(s).y * width + sys.displacement(s).x;
  }
  const std::int64_t zero_index = -origin_y * width - origin_x;

  // found[first][len - 1] marks psi values of words of that class.
  std::vector<std::vector<std::vector<char>>> found(static_cast<std::size_t>(a));

#pragma omp parallel for schedule(dynamic)
  for (int first = 0; first < a; ++first) {
    auto& mine = found[static_cast<std::size_t>(first)];
    mine.assign(static_cast<std::size_t>(n_max), std::vector<char>(cells, 0));
    std::vector<char> cur(static_cast<std::size_t>(a) * cells, 0), next(cur.size(), 0);
    cur[static_cast<std::size_t>(first) * cells +
        static_cast<std::size_t>(zero_index + step[static_cast<std::size_t>(first)])] = 1;
    for (int len = 1;; ++len) {
      auto& level = mine[static_cast<std::size_t>(len - 1)];
      for (int u = 0; u < a; ++u) {
        if (cls == WordClass::Periodic && !sys.admits(u, first)) continue;
        const char* row = cur.data() + static_cast<std::size_t>(u) * cells;
        for (std::size_t c = 0; c < cells; ++c) level[c] |= row[c];
      }
      if (len == n_max) break;
      std::fill(next.begin(), next.end(), 0);
      for (int u = 0; u < a; ++u) {
        const char* row = cur.data() + static_cast<std::size_t>(u) * cells;
        for (Symbol v : sys.successors(u)) {
          const std::int64_t off = step[static_cast<std::size_t>(v)];
          char* out = next.data() + static_cast<std::size_t>(v) * cells;
          const std::size_t c_lo = off < 0 ? static_cast<std::size_t>(-off) : 0;
          const std::size_t c_hi = off > 0 ? cells - static_cast<std::size_t>(off) : cells;
          for (std::size_t c = c_lo; c < c_hi; ++c) out[static_cast<std::int64_t>(c) + off] |= row[c];
        }
      }
      std::swap(cur, next);
    }
  }

  std::vector<std::vector<IntVec2>> sums(static_cast<std::size_t>(n_max));
  for (std::size_t len = 0; len < sums.size(); ++len) {
    for (std::size_t c = 0; c < cells; ++c) {
      bool any = false;
      for (const auto& f : found) any = any || f[len][c];
      if (!any) continue;
      const auto idx = static_cast<std::int64_t>(c);
      sums[len].push_back({origin_x + idx % width, origin_y + idx / width});
    }
    std::sort(sums[len].begin(), sums[len].end());
  }
  return sums;
}

}  // namespace

std::vector<IntVec2> word_sums_parallel(const SftSystem& sys, int n, WordClass cls) {
  return std::move(sweep(sys, n, cls).back());
}

std::vector<std::vector<IntVec2>> word_sums_by_length_parallel(const SftSystem& sys, int n_max, WordClass cls) {
  return sweep(sys, n_max, cls);
}

}  // namespace kernels

std::vector<Rational2> oracle_means(const SftSystem& sys, int n, std::uint64_t cap, WordClass cls) {
  require_valid(sys);
  check_word_cap(sys, n, cap);
  std::vector<Rational2> out;
  for (const auto& s : kernels::word_sums_parallel(sys, n, cls)) out.push_back({Rational(s.x, n), Rational(s.y, n)});
  std::sort(out.begin(), out.end());
  return out;
}

RationalPolygon oracle_hull(const SftSystem& sys, int n_max, std::uint64_t cap) {
  require_valid(sys);
  check_word_cap(sys, n_max, cap);
  std::vector<Rational2> points;
  const auto by_length = kernels::word_sums_by_length_parallel(sys, n_max, WordClass::Periodic);
  for (int n = 1; n <= n_max; ++n) {
    // Only hull vertices of each length can be hull vertices of the union.
    for (const auto& s : integer_hull(by_length[static_cast<std::size_t>(n - 1)])) {
      points.push_back({Rational(s.x, n), Rational(s.y, n)});
    }
  }
  if (points.empty()) {
    throw Error(ErrorCode::NoCycles, "no periodic word of length <= " + std::to_string(n_max));
  }
  return RationalPolygon::hull(std::move(points));
}

}  // namespace rotset
