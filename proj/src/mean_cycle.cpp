#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

#include "rotset/polygon_engine.hpp"

namespace rotset {

namespace {

// Weight in the lexicographically ordered group Z^2.
struct Lex {
  std::int64_t p = 0;
  std::int64_t s = 0;

  friend bool operator==(const Lex&, const Lex&) = default;
  friend auto operator<=>(const Lex&, const Lex&) = default;
  friend Lex operator+(Lex a, Lex b) { return {a.p + b.p, a.s + b.s}; }
  friend Lex operator-(Lex a, Lex b) { return {a.p - b.p, a.s - b.s}; }
};

// a / da compared with b / db for positive denominators.
std::strong_ordering compare_ratio(Lex a, std::int64_t da, Lex b, std::int64_t db) {
  const __int128 ap = static_cast<__int128>(a.p) * db, bp = static_cast<__int128>(b.p) * da;
  if (ap != bp) return ap < bp ? std::strong_ordering::less : std::strong_ordering::greater;
  const __int128 as = static_cast<__int128>(a.s) * db, bs = static_cast<__int128>(b.s) * da;
  if (as != bs) return as < bs ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

struct MeanValue {
  Lex num;
  std::int64_t den = 1;
};

// Karp: with D_k(v) the heaviest walk of exactly k steps ending at v (starting
// anywhere), the maximum cycle mean is max_v min_k (D_n(v) - D_k(v)) / (n - k).
// The walk weight counts the symbol being left at each step.
std::optional<MeanValue> karp(const SftSystem& sys, const std::vector<Lex>& weight) {
  const std::size_t n = static_cast<std::size_t>(sys.alphabet_size);
  std::vector<Lex> d((n + 1) * n);
  std::vector<char> reach((n + 1) * n, 0);
  std::fill(reach.begin(), reach.begin() + static_cast<std::ptrdiff_t>(n), 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t prev = (k - 1) * n, cur = k * n;
    for (std::size_t u = 0; u < n; ++u) {
      if (!reach[prev + u]) continue;
      const Lex cand_base = d[prev + u] + weight[u];
      for (Symbol v : sys.transitions[u]) {
        const std::size_t idx = cur + static_cast<std::size_t>(v);
        if (!reach[idx] || d[idx] < cand_base) {
          d[idx] = cand_base;
          reach[idx] = 1;
        }
      }
    }
  }

  std::optional<MeanValue> best;
  for (std::size_t v = 0; v < n; ++v) {
    if (!reach[n * n + v]) continue;
    std::optional<MeanValue> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!reach[k * n + v]) continue;
      const MeanValue m{d[n * n + v] - d[k * n + v], static_cast<std::int64_t>(n - k)};
      if (!worst || compare_ratio(m.num, m.den, worst->num, worst->den) < 0) worst = m;
    }
    if (worst && (!best || compare_ratio(worst->num, worst->den, best->num, best->den) > 0)) best = worst;
  }
  return best;
}

// Every cycle whose edges are all tight under longest-path potentials of the
// reduced weights (den * w - num) has mean exactly num / den; return a shortest one.
Word tight_cycle(const SftSystem& sys, const std::vector<Lex>& weight, const MeanValue& value) {
  const std::size_t n = static_cast<std::size_t>(sys.alphabet_size);
  std::vector<Lex> reduced(n);
  for (std::size_t u = 0; u < n; ++u) {
    reduced[u] = Lex{value.den * weight[u].p - value.num.p, value.den * weight[u].s - value.num.s};
  }
  std::vector<Lex> pot(n);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      for (Symbol v : sys.transitions[u]) {
        const Lex cand = pot[u] + reduced[u];
        if (pot[static_cast<std::size_t>(v)] < cand) {
          pot[static_cast<std::size_t>(v)] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
    if (round == n) throw Error(ErrorCode::Invalid, "potential iteration did not converge");
  }

  std::vector<std::vector<Symbol>> tight(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (Symbol v : sys.transitions[u]) {
      if (pot[u] + reduced[u] == pot[static_cast<std::size_t>(v)]) tight[u].push_back(v);
    }
  }

  std::optional<Word> best;
  std::vector<int> parent(n), dist(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (tight[start].empty()) continue;
    if (best && best->size() == 1) break;
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<std::size_t> queue;
    dist[start] = 0;
    queue.push_back(start);
    std::optional<std::size_t> closing;
    while (!queue.empty() && !closing) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (Symbol sv : tight[u]) {
        const auto v = static_cast<std::size_t>(sv);
        if (v == start) {
          closing = u;
          break;
        }
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int>(u);
          queue.push_back(v);
        }
      }
    }
    if (!closing) continue;
    Word w;
    for (std::size_t u = *closing;; u = static_cast<std::size_t>(parent[u])) {
      w.push_back(static_cast<Symbol>(u));
      if (u == start) break;
    }
    std::reverse(w.begin(), w.end());
    w = canonical_rotation(w);
    if (!best || w.size() < best->size() || (w.size() == best->size() && w < *best)) best = std::move(w);
  }
  if (!best) throw Error(ErrorCode::NoCycles, "no optimal cycle found among tight edges");
  return *best;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

// Smallest integer vector positively proportional to a rational direction.
IntVec2 integer_direction(const Rational2& d) {
  const std::int64_t m = lcm64(d.x.den(), d.y.den());
  std::int64_t x = d.x.num() * (m / d.x.den());
  std::int64_t y = d.y.num() * (m / d.y.den());
  const std::int64_t g = std::gcd(x, y);
  if (g > 1) {
    x /= g;
    y /= g;
  }
  return {x, y};
}

}  // namespace

ExtremeCycle lex_max_mean_cycle(const SftSystem& sys, IntVec2 primary, IntVec2 secondary) {
  require_valid(sys);
  std::vector<Lex> weight(static_cast<std::size_t>(sys.alphabet_size));
  for (Symbol s = 0; s < sys.alphabet_size; ++s) {
    weight[static_cast<std::size_t>(s)] = Lex{dot(primary, sys.displacement(s)), dot(secondary, sys.displacement(s))};
  }
  const auto value = karp(sys, weight);
  if (!value) throw Error(ErrorCode::NoCycles, "system has no cycles");
  Cycle witness = make_cycle(sys, tight_cycle(sys, weight, *value));
  return {mean(sys, witness), std::move(witness)};
}

SupportResult support_max(const SftSystem& sys, const Rational2& direction) {
  if (direction.x.is_zero() && direction.y.is_zero()) throw Error(ErrorCode::ZeroDirection, "direction (0,0)");
  auto extreme = lex_max_mean_cycle(sys, integer_direction(direction), IntVec2{0, 0});
  return {dot(direction, extreme.mean), std::move(extreme.witness)};
}

WitnessedPolygon rotation_polygon_witnessed(const SftSystem& sys) {
  // Lexicographic extremes are vertices of the hull; chords are refined on
  // their outer side until no cycle mean lies strictly beyond them.
  auto extreme = [&](IntVec2 dir) { return lex_max_mean_cycle(sys, dir, IntVec2{-dir.y, dir.x}); };

  const ExtremeCycle right = extreme({1, 0});
  const ExtremeCycle left = extreme({-1, 0});
  if (right.mean == left.mean) {
    return {RationalPolygon::hull({right.mean}), {right.witness}};
  }

  std::vector<ExtremeCycle> ccw;  // vertices strictly between the chord ends
  std::function<void(const ExtremeCycle&, const ExtremeCycle&)> refine = [&](const ExtremeCycle& a,
                                                                             const ExtremeCycle& b) {
    const Rational2 edge = b.mean - a.mean;
    const Rational2 outward{edge.y, -edge.x};  // right of a -> b
    ExtremeCycle r = extreme(integer_direction(outward));
    if (dot(outward, r.mean) <= dot(outward, a.mean)) return;
    refine(a, r);
    ccw.push_back(r);
    refine(r, b);
  };

  // Walking right -> left along the upper side then left -> right along the
  // lower side is counterclockwise.
  std::vector<ExtremeCycle> order;
  order.push_back(right);
  refine(right, left);
  for (auto& v : ccw) order.push_back(std::move(v));
  ccw.clear();
  order.push_back(left);
  refine(left, right);
  for (auto& v : ccw) order.push_back(std::move(v));

  std::vector<Rational2> points;
  for (const auto& v : order) points.push_back(v.mean);
  WitnessedPolygon out{RationalPolygon::hull(points), {}};
  for (const auto& vertex : out.polygon.vertices()) {
    const auto it = std::find_if(order.begin(), order.end(), [&](const ExtremeCycle& e) { return e.mean == vertex; });
    out.witnesses.push_back(it->witness);
  }
  return out;
}

RationalPolygon rotation_polygon(const SftSystem& sys) { return rotation_polygon_witnessed(sys).polygon; }

std::vector<Cycle> simple_cycles(const SftSystem& sys, std::size_t cap) {
  require_valid(sys);
  const int n = sys.alphabet_size;
  std::vector<Cycle> out;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  Word path;

  // Each cycle is found once, from its smallest symbol, by only visiting larger symbols.
  std::function<void(Symbol, Symbol)> dfs = [&](Symbol start, Symbol u) {
    for (Symbol v : sys.successors(u)) {
      if (v == start) {
        if (out.size() >= cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " simple cycles");
        out.push_back(Cycle{path, true});
      } else if (v > start && !on_path[static_cast<std::size_t>(v)]) {
        on_path[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        dfs(start, v);
        path.pop_back();
        on_path[static_cast<std::size_t>(v)] = 0;
      }
    }
  };
  for (Symbol s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    dfs(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return out;
}

RationalPolygon simple_cycle_polygon(const SftSystem& sys, std::size_t cap) {
  const auto cycles = simple_cycles(sys, cap);
  if (cycles.empty()) throw Error(ErrorCode::NoCycles, "system has no cycles");
  std::vector<Rational2> means;
  means.reserve(cycles.size());
  for (const auto& c : cycles) means.push_back(mean(sys, c));
  return RationalPolygon::hull(std::move(means));
}

}  // namespace rotset
