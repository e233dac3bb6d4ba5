#include "rotset/sft.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rotset {

bool SftSystem::admits(Symbol from, Symbol to) const {
  const auto& succ = successors(from);
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

SftSystem make_system(std::vector<std::vector<Symbol>> transitions, std::vector<IntVec2> displacements) {
  SftSystem sys;
  sys.alphabet_size = static_cast<int>(transitions.size());
  for (auto& succ : transitions) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  sys.transitions = std::move(transitions);
  sys.displacements = std::move(displacements);
  return sys;
}

SftSystem full_shift(std::vector<IntVec2> displacements) {
  const int a = static_cast<int>(displacements.size());
  std::vector<Symbol> all(static_cast<std::size_t>(a));
  for (int i = 0; i < a; ++i) all[static_cast<std::size_t>(i)] = i;
  return make_system(std::vector<std::vector<Symbol>>(static_cast<std::size_t>(a), all), std::move(displacements));
}

ValidationReport validate_system(const SftSystem& sys) {
  ValidationReport report;
  const int a = sys.alphabet_size;
  if (a <= 0) report.violations.push_back("alphabet size must be positive");
  if (static_cast<int>(sys.transitions.size()) != a) {
    report.violations.push_back("transition count " + std::to_string(sys.transitions.size()) +
                                " does not match alphabet size " + std::to_string(a));
  }
  if (static_cast<int>(sys.displacements.size()) != a) {
    report.violations.push_back("displacement count " + std::to_string(sys.displacements.size()) +
                                " does not match alphabet size " + std::to_string(a));
  }
  for (std::size_t i = 0; i < sys.transitions.size(); ++i) {
    if (sys.transitions[i].empty()) report.violations.push_back("empty successor set at " + std::to_string(i));
    for (Symbol s : sys.transitions[i]) {
      if (s < 0 || s >= a) {
        report.violations.push_back("symbol " + std::to_string(s) + " out of range in successors of " +
                                    std::to_string(i));
      }
    }
  }
  return report;
}

void require_valid(const SftSystem& sys) {
  const auto report = validate_system(sys);
  if (report.ok()) return;
  std::string msg;
  for (const auto& v : report.violations) msg += (msg.empty() ? "" : "; ") + v;
  throw Error(ErrorCode::Invalid, msg);
}

TrimResult trim_to_biextendable(const SftSystem& sys) {
  require_valid(sys);
  const auto a = static_cast<std::size_t>(sys.alphabet_size);
  std::vector<char> alive(a, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> in_deg(a, 0), out_deg(a, 0);
    for (std::size_t u = 0; u < a; ++u) {
      if (!alive[u]) continue;
      for (Symbol v : sys.transitions[u]) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        ++out_deg[u];
        ++in_deg[static_cast<std::size_t>(v)];
      }
    }
    for (std::size_t u = 0; u < a; ++u) {
      if (alive[u] && (in_deg[u] == 0 || out_deg[u] == 0)) {
        alive[u] = 0;
        changed = true;
      }
    }
  }

  TrimResult result;
  result.symbol_map.assign(a, -1);
  int next = 0;
  for (std::size_t u = 0; u < a; ++u) {
    if (alive[u]) result.symbol_map[u] = next++;
  }
  if (next == 0) throw Error(ErrorCode::EmptySystem, "no symbol carries a bi-infinite itinerary");

  std::vector<std::vector<Symbol>> transitions;
  std::vector<IntVec2> displacements;
  for (std::size_t u = 0; u < a; ++u) {
    if (!alive[u]) continue;
    std::vector<Symbol> succ;
    for (Symbol v : sys.transitions[u]) {
      const int mapped = result.symbol_map[static_cast<std::size_t>(v)];
      if (mapped >= 0) succ.push_back(mapped);
    }
    transitions.push_back(std::move(succ));
    displacements.push_back(sys.displacements[u]);
  }
  result.system = make_system(std::move(transitions), std::move(displacements));
  return result;
}

bool is_admissible(const SftSystem& sys, const Word& w) {
  for (Symbol s : w) {
    if (s < 0 || s >= sys.alphabet_size) return false;
  }
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (!sys.admits(w[k], w[k + 1])) return false;
  }
  return true;
}

IntVec2 psi(const SftSystem& sys, const Word& w) {
  if (!is_admissible(sys, w)) throw Error(ErrorCode::Inadmissible, "word " + format_word(w));
  IntVec2 sum;
  for (Symbol s : w) sum += sys.displacement(s);
  return sum;
}

Word concat(const SftSystem& sys, const Word& w1, const Word& w2) {
  if (!is_admissible(sys, w1)) throw Error(ErrorCode::Inadmissible, "word " + format_word(w1));
  if (!is_admissible(sys, w2)) throw Error(ErrorCode::Inadmissible, "word " + format_word(w2));
  if (!w1.empty() && !w2.empty() && !sys.admits(w1.back(), w2.front())) {
    throw Error(ErrorCode::JunctionInadmissible,
                std::to_string(w2.front()) + " is not a successor of " + std::to_string(w1.back()));
  }
  Word out = w1;
  out.insert(out.end(), w2.begin(), w2.end());
  return out;
}

bool is_cycle(const SftSystem& sys, const Word& w) {
  return !w.empty() && is_admissible(sys, w) && sys.admits(w.back(), w.front());
}

Cycle make_cycle(const SftSystem& sys, Word w) {
  if (!is_cycle(sys, w)) throw Error(ErrorCode::Inadmissible, "not a cycle: " + format_word(w));
  Word sorted = w;
  std::sort(sorted.begin(), sorted.end());
  const bool simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return Cycle{std::move(w), simple};
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Rational2 mean(const SftSystem& sys, const Cycle& c) {
  const IntVec2 sum = psi(sys, c.word);
  const auto len = static_cast<std::int64_t>(c.length());
  return {Rational(sum.x, len), Rational(sum.y, len)};
}

SftSystem power_system(const SftSystem& sys, int n, std::size_t block_cap, std::vector<Word>* blocks_out) {
  require_valid(sys);
  if (n < 1) throw Error(ErrorCode::Invalid, "block length must be positive");

  // Breadth-first extension keeps the blocks in lexicographic order.
  std::vector<Word> blocks;
  for (Symbol s = 0; s < sys.alphabet_size; ++s) blocks.push_back({s});
  for (int len = 1; len < n; ++len) {
    std::vector<Word> longer;
    for (const auto& b : blocks) {
      for (Symbol s : sys.successors(b.back())) {
        Word e = b;
        e.push_back(s);
        longer.push_back(std::move(e));
        if (longer.size() > block_cap) {
          throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(block_cap) + " blocks");
        }
      }
    }
    blocks = std::move(longer);
  }
  if (blocks.size() > block_cap) {
    throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(block_cap) + " blocks");
  }

  // Blocks are sorted, so the successors of u are the blocks whose first symbol lies in tau(u.back()).
  std::vector<std::vector<Symbol>> starting_with(static_cast<std::size_t>(sys.alphabet_size));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    starting_with[static_cast<std::size_t>(blocks[i].front())].push_back(static_cast<Symbol>(i));
  }
  std::vector<std::vector<Symbol>> transitions;
  std::vector<IntVec2> displacements;
  transitions.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<Symbol> succ;
    for (Symbol s : sys.successors(b.back())) {
      const auto& group = starting_with[static_cast<std::size_t>(s)];
      succ.insert(succ.end(), group.begin(), group.end());
    }
    transitions.push_back(std::move(succ));
    displacements.push_back(psi(sys, b));
  }
  if (blocks_out) *blocks_out = blocks;
  return make_system(std::move(transitions), std::move(displacements));
}

SftSystem apply_integer_linear(const SftSystem& sys, const IntMat2& L) {
  require_valid(sys);
  SftSystem out = sys;
  for (auto& s : out.displacements) s = L * s;
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '0' || c > '9') throw Error(ErrorCode::Parse, "bad symbol '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::Parse, "bad symbol '" + std::string(tok) + "'");
    }
    w.push_back(v);
    pos = end + 1;
  }
  return w;
}

std::string format_word(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](Symbol s) { return s >= 0 && s < 10; });
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!digits && k > 0) os << ',';
    os << w[k];
  }
  return os.str();
}

}  // namespace rotset
