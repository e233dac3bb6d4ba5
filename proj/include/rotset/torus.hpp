#pragma once

// Floating-point orbit experiments on explicit lifts of torus maps. Everything
// here is an estimate; nothing crosses back into the exact polygon code.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rotset/sft.hpp"

namespace rotset {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend Vec2 operator/(Vec2 a, double k) { return {a.x / k, a.y / k}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline bool finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// F(x) = x + v.
struct TranslationLift {
  Vec2 v;
  friend bool operator==(const TranslationLift&, const TranslationLift&) = default;
};

/// F(x, y) = (x + a sin(2 pi y), y + b sin(2 pi x)).
struct StandardLift {
  double a = 0.25;
  double b = 0.25;
  friend bool operator==(const StandardLift&, const StandardLift&) = default;
};

/// F = V o H with H(x, y) = (x + shift * g(y), y) and V(x, y) = (x, y + amp * h(x)).
///
/// g is 1-periodic and smooth: 0 on [fall_end - 1, rise_begin], climbing on
/// [rise_begin, rise_end], 1 on [rise_end, fall_begin] and back down on
/// [fall_begin, fall_end]. h is a smooth bump of height 1 supported on
/// (center - half_width, center + half_width) mod 1. With the demo
/// configuration one rectangle is moved by exactly (shift, 0) and another is
/// left pointwise fixed.
struct ShearPairLift {
  double shift = 1.0;
  double rise_begin = 0.45;
  double rise_end = 0.55;
  double fall_begin = 0.85;
  double fall_end = 1.15;
  double amp = 0.1;
  double bump_center = 0.0;
  double bump_half_width = 0.1;
  friend bool operator==(const ShearPairLift&, const ShearPairLift&) = default;
};

/// A lift of a torus map homotopic to the identity: F(x + m) = F(x) + m.
class TorusLift {
 public:
  using Family = std::variant<TranslationLift, StandardLift, ShearPairLift>;

  explicit TorusLift(Family family);

  Vec2 operator()(Vec2 p) const;
  const Family& family() const noexcept { return family_; }
  std::string name() const;
  /// Analytic bound D >= sup |F(x) - x| when the family provides one.
  std::optional<double> displacement_bound() const;

  friend bool operator==(const TorusLift&, const TorusLift&) = default;

 private:
  Family family_;
};

/// The lift whose parameters are shipped in data/demo_lift.json.
TorusLift demo_lift();

/// D from the family when available, else max |F(x) - x| over a 128 x 128 grid plus 10%.
double displacement_bound(const TorusLift& lift);

/// Largest |F(x + m) - F(x) - m| over sampled points and |m| <= 2.
double periodicity_defect(const TorusLift& lift, std::size_t samples = 16);

struct OrbitRecord {
  Vec2 start;
  /// F^k(start) for k = 0..n in lifted coordinates.
  std::vector<Vec2> iterates;
  /// phi_k = (F^k(start) - start) / k for k = 1..n (index k - 1).
  std::vector<Vec2> means;
  /// Sum of the per-step displacements F(p_k) - p_k, divided by n.
  Vec2 accumulated_mean;
};

OrbitRecord orbit(const TorusLift& lift, Vec2 start, int n);
/// (F^n(x) - x) / n. Throws NonFinite when the orbit leaves the doubles.
Vec2 phi_n(const TorusLift& lift, Vec2 x, int n);

/// Points (i / g, j / g) of the fundamental domain, row-major in j.
std::vector<Vec2> unit_grid(int g);

struct CauchyReport {
  bool pass = false;
  double bound_d = 0.0;
  double k_constant = 0.0;
  /// max over samples and n of |phi_{n+1} - phi_n| * n / K (0 when K = 0 and all differences vanish).
  double max_ratio = 0.0;
  std::size_t violations = 0;
};

/// Checks |phi_{n+1}(x) - phi_n(x)| <= K / n with K = 2D for 1 <= n < n_max,
/// allowing 1e-12 of absolute rounding slack.
CauchyReport cauchy_check(const TorusLift& lift, std::span<const Vec2> samples, int n_max);

struct RotationEstimate {
  std::vector<Vec2> starts;
  std::vector<Vec2> cloud;  ///< phi_n(start), same order as starts
  std::vector<Vec2> hull;   ///< floating-point hull, counterclockwise; an estimate only
  double diameter = 0.0;
};

namespace kernels {

std::vector<Vec2> phi_cloud_serial(const TorusLift& lift, std::span<const Vec2> starts, int n);
/// OpenMP over starting points; identical output to the serial version.
std::vector<Vec2> phi_cloud_parallel(const TorusLift& lift, std::span<const Vec2> starts, int n);

}  // namespace kernels

RotationEstimate estimate_rotation_set(const TorusLift& lift, int grid, int n);

/// Monotone-chain hull in doubles; points closer than `eps` are merged.
std::vector<Vec2> float_hull(std::vector<Vec2> points, double eps = 1e-12);

struct Box {
  Vec2 lo;
  Vec2 hi;

  bool contains(Vec2 p, double slack = 0.0) const {
    return p.x >= lo.x - slack && p.x <= hi.x + slack && p.y >= lo.y - slack && p.y <= hi.y + slack;
  }
  double diameter() const { return norm(hi - lo); }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Disjoint closed rectangles inside one domain D that projects injectively to the torus.
struct RectangleChart {
  Box domain;
  std::vector<Box> rectangles;
  std::vector<IntVec2> displacements;

  double d_s() const;
  friend bool operator==(const RectangleChart&, const RectangleChart&) = default;
};

/// Throws BadChart when rectangles overlap, leave D, or D is not narrower than 1.
void validate_chart(const RectangleChart& chart);

/// Rectangle containing pi(p) and the integer shift m with p - m in it.
std::optional<std::pair<int, IntVec2>> locate(const RectangleChart& chart, Vec2 p);

struct ChartViolation {
  int rectangle = 0;
  Vec2 point;
  Vec2 image;
};

struct ChartReport {
  bool pass = false;
  std::size_t samples = 0;
  std::vector<ChartViolation> violations;
};

/// Samples a k x k lattice (boundary included) in every rectangle and checks F(p) in D + s_i.
ChartReport verify_rotational_chart(const TorusLift& lift, const RectangleChart& chart, int samples_per_rect);

struct Itinerary {
  Word word;
  /// Number of leading iterates (starting with x itself) that lie in the chart.
  std::size_t steps_valid = 0;
};

/// Symbols of x, F(x), ..., F^{n-1}(x) until the first iterate outside the chart.
/// Throws NotInChart when x itself is outside.
Itinerary itinerary(const TorusLift& lift, const RectangleChart& chart, Vec2 x, int n);

struct DisplacementReport {
  bool pass = false;
  double bound = 0.0;
  double max_residual = 0.0;
  std::optional<int> first_violation;  ///< k with residual >= bound
};

/// |F^k(x) - x - sum_{j<k} s_{i_j}| < 2 d_S for k = 1..n. Needs the
/// iterates 0..n in the chart; ItineraryTooShort otherwise.
DisplacementReport check_displacement_bound(const TorusLift& lift, const RectangleChart& chart, Vec2 x, int n);

struct SegmentSweep {
  bool pass = false;
  std::size_t starts = 0;
  std::size_t segments = 0;  ///< starts whose orbit stays in the chart for at least one step
  int longest = 0;
  double bound = 0.0;
  double max_residual = 0.0;
};

/// Runs check_displacement_bound from a k x k lattice in every rectangle over
/// the longest in-chart prefix, capped at max_len steps.
SegmentSweep displacement_sweep(const TorusLift& lift, const RectangleChart& chart, int samples_per_rect, int max_len);

}  // namespace rotset
