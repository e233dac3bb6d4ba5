#pragma once

#include <cstddef>
#include <vector>

#include "rotset/sft.hpp"

namespace rotset {

/// A word split into cycles plus a remainder shorter than the alphabet.
struct Decomposition {
  std::vector<Cycle> cycles;
  Word remainder;
  std::size_t source_length = 0;
};

/// Repeatedly cuts out the cycle between the first repeated pair of symbols
/// (earliest second occurrence) until at most A-1 symbols remain. A word of
/// exactly A distinct symbols has no repeat; its suffix starting at the first
/// symbol that may follow the last one is cut out instead, which is the same
/// rule applied to the one-step extension of the word.
///
/// Throws Inadmissible when w is not admissible.
Decomposition decompose(const SftSystem& sys, const Word& w);

}  // namespace rotset
