#pragma once

// An almost periodic {0,1}-sequence whose running means oscillate between
// (nearly) 0 and (nearly) 1, plus finite-range checks of its properties.
//
// With a_0 = 1 and a_{n+1} = 2^{t+n} a_n, every integer i gets a level:
// level 0 when |i| <= 1, otherwise the least n >= 1 with |i| mod a_{n+1} <= a_n.
// xi(i) is the parity of that level.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rotset/rational.hpp"
#include "rotset/sft.hpp"

namespace rotset {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kDefaultSumCap = 10'000'000;

struct ApParams {
  Rational delta;
  int t = 0;
  int depth = 0;
  /// a_0 .. a_{depth+1}; the extra term lets level() decide every |i| <= a_depth.
  std::vector<BigInt> schedule;
  /// Same values saturated at INT64_MAX, for the hot loops.
  std::vector<std::int64_t> schedule64;

  const BigInt& a(int n) const { return schedule.at(static_cast<std::size_t>(n)); }
  /// a_depth saturated to int64.
  std::int64_t range() const { return schedule64[static_cast<std::size_t>(depth)]; }
};

/// t is the least positive integer with 2^-t < delta. Accepts 0 < delta <= 1
/// (BadDelta otherwise) and depth >= 2.
ApParams ap_params(const Rational& delta, int depth);

/// Throws DepthExceeded when |i| > a_depth.
int level(const ApParams& params, std::int64_t i);
int xi(const ApParams& params, std::int64_t i);

namespace kernels {

/// Number of ones among xi(begin), ..., xi(end - 1).
std::int64_t count_ones_serial(const ApParams& params, std::int64_t begin, std::int64_t end);
/// OpenMP reduction over the same range.
std::int64_t count_ones_parallel(const ApParams& params, std::int64_t begin, std::int64_t end);

}  // namespace kernels

/// xi(0), ..., xi(n - 1).
std::vector<std::uint8_t> xi_prefix(const ApParams& params, std::int64_t n);

/// S_n = (xi(0) + ... + xi(n-1)) / n, exactly. Throws CapExceeded when n > cap.
Rational partial_mean(const ApParams& params, std::int64_t n, std::int64_t cap = kDefaultSumCap);

struct Checkpoint {
  int n = 0;
  BigInt a_n;
  Rational mean;   ///< S_{a_n}
  Rational bound;  ///< a_{n-1}/a_n for even n >= 2, 1 - a_{n-1}/a_n for odd n, delta for n = 0
  bool pass = false;
  /// The weaker statement S < delta (even n) or S > 1 - delta (odd n).
  bool delta_pass = false;
};

/// Checkpoints n = 0..n_max. Even n >= 2 passes when S < a_{n-1}/a_n < delta;
/// odd n when S > 1 - a_{n-1}/a_n > 1 - delta; n = 0 when S_1 < delta.
/// Throws CapExceeded when a_{n_max} > cap.
std::vector<Checkpoint> checkpoint_bounds(const ApParams& params, int n_max, std::int64_t cap = kDefaultSumCap);

struct WindowReport {
  bool pass = false;
  std::size_t word_length = 0;
  std::size_t window = 0;
  std::size_t scan_length = 0;
  std::size_t windows_checked = 0;
  std::size_t occurrences = 0;
  /// Start of the first window that misses the word.
  std::optional<std::size_t> first_failure;
  /// Shortest window length that every window inside the scan would satisfy;
  /// empty when the word never occurs.
  std::optional<std::size_t> min_sufficient_window;
};

/// Checks that every length-`window` window of `seq` contains `word` contiguously.
WindowReport window_check(std::span<const std::uint8_t> seq, std::span<const std::uint8_t> word,
                          std::size_t window);

/// Word w = xi restricted to [0, a_{n0}], window a_{n0} + a_{n0+1}, over xi(0..scan_len-1).
/// BadWindow when scan_len < 2 * window; CapExceeded when scan_len > cap.
WindowReport recurrence_window_check(const ApParams& params, int n0, std::size_t scan_len,
                                     std::int64_t cap = kDefaultSumCap);

struct RotationPointsReport {
  std::int64_t horizon = 0;
  std::int64_t stride = 0;
  /// p_n for n = stride, 2 stride, ..., horizon.
  std::vector<Rational2> points;
  /// Position of p_n along s_0 -> s_1 equals S_n; min/max over the emitted n.
  Rational min;
  Rational max;
  Rational2 min_point;
  Rational2 max_point;
  /// Half the largest gap between consecutive distinct S_n values.
  Rational epsilon;
  Rational epsilon_sq_target;
  bool dense = false;
  bool degenerate = false;
};

/// Rotation points (psi of the first n symbols of xi) / n for a two-symbol full
/// shift. BadSystem unless sys has two symbols with tau(0) = tau(1) = {0, 1}.
/// Density is judged exactly against epsilon^2 <= epsilon_sq_target
/// (default 16 / horizon, i.e. epsilon <= 4 / sqrt(horizon)).
RotationPointsReport symbolic_rotation_points(const ApParams& params, const SftSystem& sys, std::int64_t horizon,
                                              std::int64_t stride, std::int64_t cap = kDefaultSumCap,
                                              std::optional<Rational> epsilon_sq_target = std::nullopt);

}  // namespace rotset
