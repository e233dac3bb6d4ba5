#include "rotset/almost_periodic.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include <omp.h>

namespace rotset {

namespace {

std::int64_t saturate(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::int64_t>::max())) return std::numeric_limits<std::int64_t>::max();
  return v.convert_to<std::int64_t>();
}

std::uint64_t magnitude(std::int64_t i) {
  return i < 0 ? static_cast<std::uint64_t>(-(i + 1)) + 1 : static_cast<std::uint64_t>(i);
}

// Hot path without the range check.
inline int level_unchecked(const std::vector<std::int64_t>& a, std::uint64_t m) {
  if (m <= 1) return 0;
  for (std::size_t n = 1;; ++n) {
    const auto period = static_cast<std::uint64_t>(a[n + 1]);
    const std::uint64_t r = period > m ? m : m % period;
    if (r <= static_cast<std::uint64_t>(a[n])) return static_cast<int>(n);
  }
}

void check_range(const ApParams& params, std::int64_t i) {
  if (magnitude(i) > static_cast<std::uint64_t>(params.range())) {
    throw Error(ErrorCode::DepthExceeded,
                "|" + std::to_string(i) + "| exceeds a_" + std::to_string(params.depth) + " = " + params.a(params.depth).str());
  }
}

}  // namespace

ApParams ap_params(const Rational& delta, int depth) {
  if (delta <= Rational(0) || delta > Rational(1)) {
    throw Error(ErrorCode::BadDelta, "delta must lie in (0, 1], got " + delta.str());
  }
  if (depth < 2) throw Error(ErrorCode::Invalid, "schedule depth must be at least 2");

  ApParams p;
  p.delta = delta;
  p.depth = depth;
  // Least t >= 1 with 2^-t < delta, i.e. delta * 2^t > 1.
  p.t = 1;
  while (BigInt(delta.num()) << p.t <= BigInt(delta.den())) ++p.t;

  p.schedule.push_back(BigInt(1));
  for (int n = 0; n <= depth; ++n) p.schedule.push_back(p.schedule.back() << (p.t + n));
  for (const auto& v : p.schedule) p.schedule64.push_back(saturate(v));
  return p;
}

int level(const ApParams& params, std::int64_t i) {
  check_range(params, i);
  return level_unchecked(params.schedule64, magnitude(i));
}

int xi(const ApParams& params, std::int64_t i) { return level(params, i) & 1; }

namespace kernels {

std::int64_t count_ones_serial(const ApParams& params, std::int64_t begin, std::int64_t end) {
  if (begin >= end) return 0;
  check_range(params, begin);
  check_range(params, end - 1);
  std::int64_t ones = 0;
  for (std::int64_t i = begin; i < end; ++i) ones += level_unchecked(params.schedule64, magnitude(i)) & 1;
  return ones;
}

std::int64_t count_ones_parallel(const ApParams& params, std::int64_t begin, std::int64_t end) {
  if (begin >= end) return 0;
  check_range(params, begin);
  check_range(params, end - 1);
  const auto& a = params.schedule64;
  std::int64_t ones = 0;
#pragma omp parallel for reduction(+ : ones) schedule(static)
  for (std::int64_t i = begin; i < end; ++i) ones += level_unchecked(a, magnitude(i)) & 1;
  return ones;
}

}  // namespace kernels

std::vector<std::uint8_t> xi_prefix(const ApParams& params, std::int64_t n) {
  if (n <= 0) return {};
  check_range(params, n - 1);
  std::vector<std::uint8_t> seq(static_cast<std::size_t>(n));
  const auto& a = params.schedule64;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    seq[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(level_unchecked(a, static_cast<std::uint64_t>(i)) & 1);
  }
  return seq;
}

Rational partial_mean(const ApParams& params, std::int64_t n, std::int64_t cap) {
  if (n < 1) throw Error(ErrorCode::Invalid, "partial mean needs n >= 1");
  if (n > cap) throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds the summation cap");
  return Rational(kernels::count_ones_parallel(params, 0, n), n);
}

std::vector<Checkpoint> checkpoint_bounds(const ApParams& params, int n_max, std::int64_t cap) {
  if (n_max < 0 || n_max > params.depth) {
    throw Error(ErrorCode::DepthExceeded, "checkpoint " + std::to_string(n_max) + " beyond schedule depth");
  }
  if (params.a(n_max) > BigInt(cap)) {
    throw Error(ErrorCode::CapExceeded, "a_" + std::to_string(n_max) + " = " + params.a(n_max).str() +
                                            " exceeds the summation cap");
  }
  const Rational one(1);
  std::vector<Checkpoint> out;
  std::int64_t ones = 0, summed = 0;
  for (int n = 0; n <= n_max; ++n) {
    const std::int64_t an = params.schedule64[static_cast<std::size_t>(n)];
    ones += kernels::count_ones_parallel(params, summed, an);
    summed = an;

    Checkpoint c;
    c.n = n;
    c.a_n = params.a(n);
    c.mean = Rational(ones, an);
    if (n == 0) {
      c.bound = params.delta;
      c.pass = c.mean < params.delta;
      c.delta_pass = c.pass;
    } else {
      const Rational ratio(params.schedule64[static_cast<std::size_t>(n - 1)], an);
      if (n % 2 == 0) {
        c.bound = ratio;
        c.pass = c.mean < ratio && ratio < params.delta;
        c.delta_pass = c.mean < params.delta;
      } else {
        c.bound = one - ratio;
        c.pass = c.mean > c.bound && c.bound > one - params.delta;
        c.delta_pass = c.mean > one - params.delta;
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

WindowReport window_check(std::span<const std::uint8_t> seq, std::span<const std::uint8_t> word, std::size_t window) {
  if (word.empty() || window < word.size()) throw Error(ErrorCode::BadWindow, "window shorter than the word");
  if (seq.size() < window) throw Error(ErrorCode::BadWindow, "scan shorter than one window");

  WindowReport r;
  r.word_length = word.size();
  r.window = window;
  r.scan_length = seq.size();

  std::vector<std::size_t> occ;
  const std::boyer_moore_horspool_searcher searcher(word.begin(), word.end());
  for (auto it = seq.begin();;) {
    const auto hit = std::search(it, seq.end(), searcher);
    if (hit == seq.end()) break;
    occ.push_back(static_cast<std::size_t>(hit - seq.begin()));
    it = hit + 1;
  }
  r.occurrences = occ.size();

  // Window [q, q + window) needs an occurrence p with q <= p <= q + window - |w|.
  r.pass = true;
  std::size_t next = 0;
  const std::size_t last_start = seq.size() - window;
  for (std::size_t q = 0; q <= last_start; ++q) {
    while (next < occ.size() && occ[next] < q) ++next;
    ++r.windows_checked;
    if (next == occ.size() || occ[next] > q + window - word.size()) {
      r.pass = false;
      r.first_failure = q;
      break;
    }
  }
  if (r.pass) r.windows_checked = last_start + 1;

  if (!occ.empty()) {
    std::size_t need = occ.front() + word.size();
    for (std::size_t k = 0; k + 1 < occ.size(); ++k) need = std::max(need, occ[k + 1] - occ[k] + word.size() - 1);
    need = std::max(need, seq.size() - occ.back());
    r.min_sufficient_window = need;
  }
  return r;
}

WindowReport recurrence_window_check(const ApParams& params, int n0, std::size_t scan_len, std::int64_t cap) {
  if (n0 < 0 || n0 + 1 > params.depth) {
    throw Error(ErrorCode::DepthExceeded, "n0 = " + std::to_string(n0) + " needs a_{n0+1} within the schedule");
  }
  const auto word_len = static_cast<std::size_t>(params.schedule64[static_cast<std::size_t>(n0)]) + 1;
  const auto window = static_cast<std::size_t>(params.schedule64[static_cast<std::size_t>(n0)] +
                                               params.schedule64[static_cast<std::size_t>(n0 + 1)]);
  if (scan_len < 2 * window) {
    throw Error(ErrorCode::BadWindow, "scan length " + std::to_string(scan_len) + " below twice the window " +
                                          std::to_string(window));
  }
  if (static_cast<std::int64_t>(scan_len) > cap) {
    throw Error(ErrorCode::CapExceeded, "scan length exceeds the summation cap");
  }
  const auto seq = xi_prefix(params, static_cast<std::int64_t>(scan_len));
  return window_check(seq, std::span(seq).first(word_len), window);
}

RotationPointsReport symbolic_rotation_points(const ApParams& params, const SftSystem& sys, std::int64_t horizon,
                                              std::int64_t stride, std::int64_t cap,
                                              std::optional<Rational> epsilon_sq_target) {
  const bool two_symbol_full = validate_system(sys).ok() && sys.alphabet_size == 2 &&
                               sys.successors(0) == std::vector<Symbol>{0, 1} &&
                               sys.successors(1) == std::vector<Symbol>{0, 1};
  if (!two_symbol_full) throw Error(ErrorCode::BadSystem, "need two symbols with tau(0) = tau(1) = {0, 1}");
  if (horizon < 1 || stride < 1) throw Error(ErrorCode::Invalid, "horizon and stride must be positive");
  if (horizon > cap) throw Error(ErrorCode::CapExceeded, "horizon exceeds the summation cap");

  const auto seq = xi_prefix(params, horizon);
  const Rational2 s0{Rational(sys.displacement(0).x), Rational(sys.displacement(0).y)};
  const Rational2 s1{Rational(sys.displacement(1).x), Rational(sys.displacement(1).y)};
  const Rational2 dir = s1 - s0;

  RotationPointsReport r;
  r.horizon = horizon;
  r.stride = stride;
  r.degenerate = dir == Rational2{};
  r.epsilon_sq_target = epsilon_sq_target.value_or(Rational(16, horizon));

  std::vector<Rational> params_along;
  std::int64_t ones = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    ones += seq[static_cast<std::size_t>(n - 1)];
    if (n % stride != 0) continue;
    const Rational s(ones, n);
    params_along.push_back(s);
    r.points.push_back(s0 + s * dir);
  }
  if (params_along.empty()) throw Error(ErrorCode::Invalid, "stride exceeds horizon");

  std::sort(params_along.begin(), params_along.end());
  params_along.erase(std::unique(params_along.begin(), params_along.end()), params_along.end());
  r.min = params_along.front();
  r.max = params_along.back();
  r.min_point = s0 + r.min * dir;
  r.max_point = s0 + r.max * dir;
  Rational gap(0);
  for (std::size_t k = 0; k + 1 < params_along.size(); ++k) gap = std::max(gap, params_along[k + 1] - params_along[k]);
  r.epsilon = gap / Rational(2);
  r.dense = r.epsilon * r.epsilon <= r.epsilon_sq_target;
  return r;
}

}  // namespace rotset
