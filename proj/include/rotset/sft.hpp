#pragma once

// Displacement-weighted subshifts of finite type and their word algebra.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rotset/rational.hpp"

namespace rotset {

using Symbol = int;
/// Finite admissible string of symbols; the empty word is the trivial word.
using Word = std::vector<Symbol>;

struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
  friend auto operator<=>(const IntVec2&, const IntVec2&) = default;
  friend IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend IntVec2 operator*(std::int64_t k, IntVec2 a) { return {k * a.x, k * a.y}; }
  IntVec2& operator+=(IntVec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  friend std::ostream& operator<<(std::ostream& os, IntVec2 v) {
    return os << '(' << v.x << ", " << v.y << ')';
  }
};

inline std::int64_t dot(IntVec2 a, IntVec2 b) { return a.x * b.x + a.y * b.y; }

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct IntMat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  IntVec2 operator*(IntVec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Rational2 operator*(const Rational2& v) const {
    return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
  }
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

/// Symbols 0..A-1, a successor set per symbol and an integer displacement per symbol.
///
/// The struct does not enforce its invariants so that malformed input can be
/// represented and reported; `validate_system` lists every violation and the
/// operations below call `require_valid` first.
struct SftSystem {
  int alphabet_size = 0;
  std::vector<std::vector<Symbol>> transitions;
  std::vector<IntVec2> displacements;

  int size() const noexcept { return alphabet_size; }
  const std::vector<Symbol>& successors(Symbol s) const { return transitions[static_cast<std::size_t>(s)]; }
  IntVec2 displacement(Symbol s) const { return displacements[static_cast<std::size_t>(s)]; }
  /// True iff `to` is an allowed successor of `from`. Linear in |tau(from)|.
  bool admits(Symbol from, Symbol to) const;

  friend bool operator==(const SftSystem&, const SftSystem&) = default;
};

/// Builds a system with sorted, de-duplicated successor lists.
SftSystem make_system(std::vector<std::vector<Symbol>> transitions, std::vector<IntVec2> displacements);
/// Every transition allowed.
SftSystem full_shift(std::vector<IntVec2> displacements);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate_system(const SftSystem& sys);
/// Throws Error(Invalid) listing the violations.
void require_valid(const SftSystem& sys);

struct TrimResult {
  SftSystem system;
  /// symbol_map[old] = new index, or -1 when the symbol was removed.
  std::vector<int> symbol_map;
};

/// Removes symbols without predecessors or successors until nothing changes.
TrimResult trim_to_biextendable(const SftSystem& sys);

bool is_admissible(const SftSystem& sys, const Word& w);
/// Sum of displacements along w; zero for the trivial word.
IntVec2 psi(const SftSystem& sys, const Word& w);
Word concat(const SftSystem& sys, const Word& w1, const Word& w2);
bool is_cycle(const SftSystem& sys, const Word& w);

struct Cycle {
  Word word;
  bool simple = false;

  std::size_t length() const noexcept { return word.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Validates w as a cycle of sys and fills the simple flag.
Cycle make_cycle(const SftSystem& sys, Word w);
/// Lexicographically smallest rotation.
Word canonical_rotation(const Word& w);
/// psi(c) / l_c in lowest terms.
Rational2 mean(const SftSystem& sys, const Cycle& c);

inline constexpr std::size_t kDefaultBlockCap = 1024;

/// Higher block presentation: symbols are the admissible words of length n
/// (in lexicographic order, returned through `blocks` when non-null).
SftSystem power_system(const SftSystem& sys, int n, std::size_t block_cap = kDefaultBlockCap,
                       std::vector<Word>* blocks = nullptr);

/// Same transitions, displacements pushed forward by L.
SftSystem apply_integer_linear(const SftSystem& sys, const IntMat2& L);

/// "0,1,2" or, when every symbol is a single digit, "012".
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace rotset
