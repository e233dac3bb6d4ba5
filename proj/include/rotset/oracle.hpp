#pragma once

// Brute-force oracles over admissible words of fixed length, independent of
// the cycle machinery in polygon_engine.hpp.

#include <cstdint>
#include <vector>

#include "rotset/polygon.hpp"
#include "rotset/sft.hpp"

namespace rotset {

inline constexpr std::uint64_t kDefaultWordCap = 20'000'000;

enum class WordClass {
  All,       ///< every admissible word of the given length
  Periodic,  ///< admissible words whose wrap-around step is admissible
};

namespace kernels {

/// Distinct psi(alpha) over words of length n, sorted. Literal depth-first
/// enumeration of every word; the serial reference.
std::vector<IntVec2> word_sums_serial(const SftSystem& sys, int n, WordClass cls);

/// Same set via a reachable-state sweep over (first symbol, last symbol, psi),
/// parallelized over the first symbol with OpenMP.
std::vector<IntVec2> word_sums_parallel(const SftSystem& sys, int n, WordClass cls);

/// word_sums_parallel for every length 1..n_max in one sweep; entry k is length k + 1.
std::vector<std::vector<IntVec2>> word_sums_by_length_parallel(const SftSystem& sys, int n_max, WordClass cls);

}  // namespace kernels

/// {psi(alpha) / n : alpha admissible of length n}, sorted and de-duplicated.
/// Throws CapExceeded when A^n > cap.
std::vector<Rational2> oracle_means(const SftSystem& sys, int n, std::uint64_t cap = kDefaultWordCap,
                                    WordClass cls = WordClass::All);

/// Exact hull of the periodic-word means over all lengths 1..n_max.
/// Throws NoCycles when no periodic word of length <= n_max exists.
RationalPolygon oracle_hull(const SftSystem& sys, int n_max, std::uint64_t cap = kDefaultWordCap);

/// Throws CapExceeded when A^n exceeds cap.
void check_word_cap(const SftSystem& sys, int n, std::uint64_t cap);

}  // namespace rotset
