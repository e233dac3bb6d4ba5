#pragma once

// Exact rotation polygon of a subshift: cycle enumeration, maximum-mean-cycle
// support queries and the polygon assembled from them.

#include <cstddef>
#include <vector>

#include "rotset/polygon.hpp"
#include "rotset/sft.hpp"

namespace rotset {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// Cycles with pairwise distinct symbols, one per rotation class, each in its
/// lexicographically smallest rotation; sorted by (length, word).
/// Throws CapExceeded when more than `cap` cycles exist.
std::vector<Cycle> simple_cycles(const SftSystem& sys, std::size_t cap = kDefaultCycleCap);

/// A cycle maximizing the mean of <primary, s> and, among those, <secondary, s>.
struct ExtremeCycle {
  Rational2 mean;
  Cycle witness;
};

/// Lexicographic maximum-mean cycle, computed exactly with Karp's recurrence on
/// integer pair weights. The witness is a shortest cycle attaining the optimum
/// (smallest canonical word among those the search meets), so it is simple.
ExtremeCycle lex_max_mean_cycle(const SftSystem& sys, IntVec2 primary, IntVec2 secondary);

struct SupportResult {
  Rational value;
  Cycle witness;
};

/// max over cycles of <w, psi(nu)> / l_nu. Throws ZeroDirection for w = 0.
SupportResult support_max(const SftSystem& sys, const Rational2& direction);

struct WitnessedPolygon {
  RationalPolygon polygon;
  /// witnesses[i] realizes polygon.vertices()[i].
  std::vector<Cycle> witnesses;
};

/// Convex hull of all cycle means, built from lexicographic support queries
/// (chord refinement), so it never enumerates cycles.
WitnessedPolygon rotation_polygon_witnessed(const SftSystem& sys);
RationalPolygon rotation_polygon(const SftSystem& sys);

/// Reference route: hull of the means of `simple_cycles(sys)`.
RationalPolygon simple_cycle_polygon(const SftSystem& sys, std::size_t cap = kDefaultCycleCap);

}  // namespace rotset
