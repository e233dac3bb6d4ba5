#pragma once

#include <cstdint>
#include <vector>

#include "rotset/oracle.hpp"
#include "rotset/polygon_engine.hpp"

namespace rotset {

struct OracleLengthCheck {
  int n = 0;
  std::size_t mean_count = 0;      ///< distinct means of all words of length n
  Rational max_distance_sq;        ///< largest squared distance of such a mean to the polygon
  Rational bound_sq;               ///< (2 A s_max / n)^2
  bool pass = false;
};

/// Cycle polygon of the trimmed system against the brute-force word oracle.
struct OracleComparison {
  SftSystem trimmed;
  WitnessedPolygon polygon;
  RationalPolygon oracle;       ///< oracle_hull(trimmed, n_max)
  bool contained = false;       ///< oracle hull inside the polygon
  bool realized = false;        ///< every vertex is a periodic mean at each multiple of its witness length
  bool equal = false;
  bool equality_required = false;  ///< n_max reaches every witness length
  int equal_from = 0;           ///< least n_max giving equality, 0 if none
  std::vector<OracleLengthCheck> per_length;
  bool pass = false;
};

OracleComparison compare_with_oracle(const SftSystem& sys, int n_max, std::uint64_t cap = kDefaultWordCap);

}  // namespace rotset
