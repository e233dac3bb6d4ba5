#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "rotset/error.hpp"

namespace rotset {

/// Exact rational p/q kept in lowest terms with q >= 1.
///
/// Storage is 64-bit; every intermediate product is formed in 128 bits and
/// the result is checked on the way back down, so an operation either returns
/// the exact value or throws Error(Overflow). The magnitudes that occur for
/// rotation polygons of desk-scale systems are many orders below the limit.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", always with an explicit denominator ("1/1", "0/1").
  std::string str() const;
  /// Accepts "p/q", "p" or "-p/q"; rejects zero denominators.
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.assign128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.assign128(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                static_cast<__int128>(a.den_) * b.den_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.assign128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::Overflow, "rational division by zero");
    Rational r;
    r.assign128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    return r;
  }
  Rational operator-() const {
    Rational r;
    r.assign128(-static_cast<__int128>(num_), den_);
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  void assign(std::int64_t num, std::int64_t den) { assign128(num, den); }
  void assign128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact point or vector in Q^2.
struct Rational2 {
  Rational x;
  Rational y;

  friend bool operator==(const Rational2&, const Rational2&) = default;
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Rational2& a, const Rational2& b) noexcept {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }

  friend Rational2 operator+(const Rational2& a, const Rational2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Rational2 operator-(const Rational2& a, const Rational2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Rational2 operator*(const Rational& k, const Rational2& a) { return {k * a.x, k * a.y}; }
  friend Rational2 operator/(const Rational2& a, const Rational& k) { return {a.x / k, a.y / k}; }

  friend std::ostream& operator<<(std::ostream& os, const Rational2& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

inline Rational dot(const Rational2& a, const Rational2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Rational2& a, const Rational2& b) { return a.x * b.y - a.y * b.x; }
/// Sign of the turn a -> b -> c: positive for counterclockwise.
inline int orientation(const Rational2& a, const Rational2& b, const Rational2& c) {
  return cross(b - a, c - a).sign();
}
inline Rational norm_squared(const Rational2& a) { return dot(a, a); }

}  // namespace rotset
