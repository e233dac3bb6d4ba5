#include "rotset/decompose.hpp"

#include <algorithm>

namespace rotset {

Decomposition decompose(const SftSystem& sys, const Word& w) {
  require_valid(sys);
  if (!is_admissible(sys, w)) throw Error(ErrorCode::Inadmissible, "word " + format_word(w));

  Decomposition out;
  out.source_length = w.size();
  Word cur = w;
  const auto limit = static_cast<std::size_t>(sys.alphabet_size - 1);
  std::vector<std::ptrdiff_t> seen(static_cast<std::size_t>(sys.alphabet_size));

  while (cur.size() > limit) {
    std::fill(seen.begin(), seen.end(), -1);
    std::ptrdiff_t j1 = -1, j2 = -1;
    for (std::size_t k = 0; k < cur.size(); ++k) {
      auto& slot = seen[static_cast<std::size_t>(cur[k])];
      if (slot >= 0) {
        j1 = slot;
        j2 = static_cast<std::ptrdiff_t>(k);
        break;
      }
      slot = static_cast<std::ptrdiff_t>(k);
    }
    if (j2 < 0) {
      // |cur| == A with all symbols distinct: every successor of the last symbol occurs in cur.
      j2 = static_cast<std::ptrdiff_t>(cur.size());
      j1 = j2;
      for (Symbol s : sys.successors(cur.back())) j1 = std::min(j1, seen[static_cast<std::size_t>(s)]);
    }
    Word cycle(cur.begin() + j1, cur.begin() + j2);
    out.cycles.push_back(make_cycle(sys, std::move(cycle)));
    cur.erase(cur.begin() + j1, cur.begin() + j2);
  }
  out.remainder = std::move(cur);
  return out;
}

}  // namespace rotset
