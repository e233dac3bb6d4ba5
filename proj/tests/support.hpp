#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls the cycle search, the mean-cycle engine or the library hull.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rotset/polygon.hpp"
#include "rotset/sft.hpp"

namespace rotset::testing {

inline std::string data_path(const std::string& name) { return std::string(ROTSET_DATA_DIR) + "/" + name; }

/// A random system with nonempty successor sets.
inline SftSystem random_system(std::mt19937_64& rng, int max_alphabet, int max_coord) {
  std::uniform_int_distribution<int> size(1, max_alphabet);
  std::uniform_int_distribution<int> coord(-max_coord, max_coord);
  const int a = size(rng);
  std::vector<std::vector<Symbol>> tr(static_cast<std::size_t>(a));
  std::vector<IntVec2> disp;
  for (int i = 0; i < a; ++i) {
    while (tr[static_cast<std::size_t>(i)].empty()) {
      for (int j = 0; j < a; ++j) {
        if (rng() % 2 == 0) tr[static_cast<std::size_t>(i)].push_back(j);
      }
    }
    disp.push_back({coord(rng), coord(rng)});
  }
  return make_system(std::move(tr), std::move(disp));
}

/// Uniform random walk of the given length; every symbol has a successor.
inline Word random_word(std::mt19937_64& rng, const SftSystem& sys, std::size_t len) {
  Word w;
  w.push_back(static_cast<Symbol>(rng() % static_cast<std::uint64_t>(sys.alphabet_size)));
  while (w.size() < len) {
    const auto& succ = sys.transitions[static_cast<std::size_t>(w.back())];
    w.push_back(succ[rng() % succ.size()]);
  }
  return w;
}

inline Word min_rotation(const Word& w) {
  Word best = w, cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    best = std::min(best, cur);
  }
  return best;
}

/// Simple cycles by trying every ordered selection of distinct symbols.
inline std::set<Word> brute_simple_cycles(const SftSystem& sys) {
  const int a = sys.alphabet_size;
  std::set<Word> out;
  for (std::uint32_t mask = 1; mask < (1u << a); ++mask) {
    Word syms;
    for (int i = 0; i < a; ++i) {
      if (mask & (1u << i)) syms.push_back(i);
    }
    do {
      bool ok = true;
      for (std::size_t k = 0; k < syms.size() && ok; ++k) {
        const Symbol from = syms[k], to = syms[(k + 1) % syms.size()];
        const auto& succ = sys.transitions[static_cast<std::size_t>(from)];
        ok = std::find(succ.begin(), succ.end(), to) != succ.end();
      }
      if (ok) out.insert(min_rotation(syms));
    } while (std::next_permutation(syms.begin(), syms.end()));
  }
  return out;
}

inline Rational2 brute_mean(const SftSystem& sys, const Word& w) {
  std::int64_t x = 0, y = 0;
  for (Symbol s : w) {
    x += sys.displacements[static_cast<std::size_t>(s)].x;
    y += sys.displacements[static_cast<std::size_t>(s)].y;
  }
  const auto n = static_cast<std::int64_t>(w.size());
  return {Rational(x, n), Rational(y, n)};
}

inline Rational cross3(const Rational2& o, const Rational2& a, const Rational2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Hull vertices by the O(n^3) edge test: (p, q) is an edge when no point lies
/// strictly right of p->q and collinear points lie between p and q.
inline std::set<Rational2> brute_hull_vertices(std::vector<Rational2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return {pts.begin(), pts.end()};
  std::set<Rational2> out;
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      if (p == q) continue;
      bool edge = true;
      for (const auto& r : pts) {
        const Rational c = cross3(p, q, r);
        if (c < Rational(0)) {
          edge = false;
          break;
        }
        if (c == Rational(0)) {
          const Rational t = dot(r - p, q - p);
          if (t < Rational(0) || t > dot(q - p, q - p)) {
            edge = false;
            break;
          }
        }
      }
      if (edge) {
        out.insert(p);
        out.insert(q);
      }
    }
  }
  return out;
}

inline std::set<Rational2> vertex_set(const RationalPolygon& poly) {
  return {poly.vertices().begin(), poly.vertices().end()};
}

/// Exact squared distance from p to segment [a, b].
inline Rational segment_distance_sq(const Rational2& p, const Rational2& a, const Rational2& b) {
  const Rational2 ab = b - a;
  const Rational len = dot(ab, ab);
  if (len == Rational(0)) return dot(p - a, p - a);
  Rational t = dot(p - a, ab) / len;
  t = std::clamp(t, Rational(0), Rational(1));
  const Rational2 foot = a + t * ab;
  return dot(p - foot, p - foot);
}

/// Random nonzero rational direction with small numerators and denominators.
inline Rational2 random_direction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 10);
  for (;;) {
    Rational2 d{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (!(d == Rational2{})) return d;
  }
}

}  // namespace rotset::testing
