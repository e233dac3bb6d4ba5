#include "rotset/torus.hpp"

#include <algorithm>
#include <numbers>

#include <omp.h>

namespace rotset {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// C-infinity step from 0 (u <= 0) to 1 (u >= 1).
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

double plateau(const ShearPairLift& f, double y) {
  const double base = f.fall_end - 1.0;
  const double yy = y - std::floor(y - base);  // in [base, base + 1)
  if (yy <= f.rise_begin) return 0.0;
  if (yy < f.rise_end) return smooth_step((yy - f.rise_begin) / (f.rise_end - f.rise_begin));
  if (yy <= f.fall_begin) return 1.0;
  return 1.0 - smooth_step((yy - f.fall_begin) / (f.fall_end - f.fall_begin));
}

double bump(const ShearPairLift& f, double x) {
  const double d = (x - f.bump_center) - std::round(x - f.bump_center);
  const double u = d / f.bump_half_width;
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

struct Apply {
  Vec2 p;
  Vec2 operator()(const TranslationLift& f) const { return p + f.v; }
  Vec2 operator()(const StandardLift& f) const {
    return {p.x + f.a * std::sin(kTwoPi * p.y), p.y + f.b * std::sin(kTwoPi * p.x)};
  }
  Vec2 operator()(const ShearPairLift& f) const {
    const double x = p.x + f.shift * plateau(f, p.y);
    return {x, p.y + f.amp * bump(f, x)};
  }
};

}  // namespace

TorusLift::TorusLift(Family family) : family_(std::move(family)) {}

Vec2 TorusLift::operator()(Vec2 p) const { return std::visit(Apply{p}, family_); }

std::string TorusLift::name() const {
  switch (family_.index()) {
    case 0: return "translation";
    case 1: return "standard";
    default: return "shear_pair";
  }
}

std::optional<double> TorusLift::displacement_bound() const {
  return std::visit(
      [](const auto& f) -> std::optional<double> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, TranslationLift>) return norm(f.v);
        else if constexpr (std::is_same_v<T, StandardLift>) return std::hypot(f.a, f.b);
        else return std::hypot(f.shift, f.amp);
      },
      family_);
}

TorusLift demo_lift() { return TorusLift(ShearPairLift{}); }

double displacement_bound(const TorusLift& lift) {
  if (auto d = lift.displacement_bound()) return *d;
  double best = 0.0;
  for (const auto& p : unit_grid(128)) best = std::max(best, norm(lift(p) - p));
  return 1.1 * best;
}

double periodicity_defect(const TorusLift& lift, std::size_t samples) {
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < samples; ++j) {
      const Vec2 p{(static_cast<double>(i) + 0.37) / static_cast<double>(samples),
                   (static_cast<double>(j) + 0.61) / static_cast<double>(samples)};
      const Vec2 fp = lift(p);
      for (int mx = -2; mx <= 2; ++mx) {
        for (int my = -2; my <= 2; ++my) {
          if (mx * mx + my * my > 4) continue;
          const Vec2 m{static_cast<double>(mx), static_cast<double>(my)};
          worst = std::max(worst, norm(lift(p + m) - fp - m));
        }
      }
    }
  }
  return worst;
}

OrbitRecord orbit(const TorusLift& lift, Vec2 start, int n) {
  if (n < 1) throw Error(ErrorCode::Invalid, "orbit length must be positive");
  OrbitRecord rec;
  rec.start = start;
  rec.iterates.reserve(static_cast<std::size_t>(n) + 1);
  rec.means.reserve(static_cast<std::size_t>(n));
  rec.iterates.push_back(start);
  Vec2 p = start, steps{};
  for (int k = 1; k <= n; ++k) {
    const Vec2 q = lift(p);
    if (!finite(q)) throw Error(ErrorCode::NonFinite, "orbit left the finite doubles at step " + std::to_string(k));
    steps = steps + (q - p);
    p = q;
    rec.iterates.push_back(p);
    rec.means.push_back((p - start) / static_cast<double>(k));
  }
  rec.accumulated_mean = steps / static_cast<double>(n);
  return rec;
}

Vec2 phi_n(const TorusLift& lift, Vec2 x, int n) {
  if (n < 1) throw Error(ErrorCode::Invalid, "n must be positive");
  Vec2 p = x;
  for (int k = 0; k < n; ++k) p = lift(p);
  if (!finite(p)) throw Error(ErrorCode::NonFinite, "orbit left the finite doubles");
  return (p - x) / static_cast<double>(n);
}

std::vector<Vec2> unit_grid(int g) {
  if (g < 1) throw Error(ErrorCode::Invalid, "grid resolution must be positive");
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
  for (int j = 0; j < g; ++j) {
    for (int i = 0; i < g; ++i) pts.push_back({static_cast<double>(i) / g, static_cast<double>(j) / g});
  }
  return pts;
}

CauchyReport cauchy_check(const TorusLift& lift, std::span<const Vec2> samples, int n_max) {
  CauchyReport r;
  r.bound_d = displacement_bound(lift);
  r.k_constant = 2.0 * r.bound_d;
  constexpr double kSlack = 1e-12;
  for (const Vec2& x : samples) {
    const OrbitRecord rec = orbit(lift, x, n_max);
    for (int n = 1; n < n_max; ++n) {
      const double diff = norm(rec.means[static_cast<std::size_t>(n)] - rec.means[static_cast<std::size_t>(n - 1)]);
      const double allowed = r.k_constant / n;
      if (diff > allowed + kSlack) ++r.violations;
      if (r.k_constant > 0.0) r.max_ratio = std::max(r.max_ratio, diff * n / r.k_constant);
    }
  }
  r.pass = r.violations == 0;
  return r;
}

namespace kernels {

std::vector<Vec2> phi_cloud_serial(const TorusLift& lift, std::span<const Vec2> starts, int n) {
  std::vector<Vec2> cloud;
  cloud.reserve(starts.size());
  for (const Vec2& x : starts) cloud.push_back(phi_n(lift, x, n));
  return cloud;
}

std::vector<Vec2> phi_cloud_parallel(const TorusLift& lift, std::span<const Vec2> starts, int n) {
  std::vector<Vec2> cloud(starts.size());
  const auto count = static_cast<std::int64_t>(starts.size());
  bool overflow = false;
#pragma omp parallel for schedule(static) reduction(|| : overflow)
  for (std::int64_t i = 0; i < count; ++i) {
    Vec2 p = starts[static_cast<std::size_t>(i)];
    for (int k = 0; k < n; ++k) p = lift(p);
    overflow = overflow || !finite(p);
    cloud[static_cast<std::size_t>(i)] = (p - starts[static_cast<std::size_t>(i)]) / static_cast<double>(n);
  }
  if (overflow) throw Error(ErrorCode::NonFinite, "orbit left the finite doubles");
  return cloud;
}

}  // namespace kernels

std::vector<Vec2> float_hull(std::vector<Vec2> points, double eps) {
  std::sort(points.begin(), points.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  std::vector<Vec2> uniq;
  for (const Vec2& p : points) {
    if (uniq.empty() || norm(p - uniq.back()) > eps) uniq.push_back(p);
  }
  if (uniq.size() <= 2) {
    if (uniq.size() == 2 && norm(uniq[1] - uniq[0]) <= eps) uniq.pop_back();
    return uniq;
  }
  auto cross = [](Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  std::vector<Vec2> hull(2 * uniq.size());
  std::size_t k = 0;
  for (const Vec2& p : uniq) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= eps * eps) --k;
    hull[k++] = p;
  }
  for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], uniq[i]) <= eps * eps) --k;
    hull[k++] = uniq[i];
  }
  hull.resize(k - 1);
  return hull;
}

RotationEstimate estimate_rotation_set(const TorusLift& lift, int grid, int n) {
  if (grid < 2) throw Error(ErrorCode::Invalid, "grid must be at least 2 x 2");
  if (n < 1) throw Error(ErrorCode::Invalid, "n must be positive");
  RotationEstimate est;
  est.starts = unit_grid(grid);
  est.cloud = kernels::phi_cloud_parallel(lift, est.starts, n);
  est.hull = float_hull(est.cloud);
  for (std::size_t i = 0; i < est.hull.size(); ++i) {
    for (std::size_t j = i + 1; j < est.hull.size(); ++j) {
      est.diameter = std::max(est.diameter, norm(est.hull[i] - est.hull[j]));
    }
  }
  return est;
}

double RectangleChart::d_s() const {
  double d = 0.0;
  for (const Box& r : rectangles) d = std::max(d, r.diameter());
  return d;
}

void validate_chart(const RectangleChart& chart) {
  const Box& dom = chart.domain;
  if (!(dom.lo.x < dom.hi.x && dom.lo.y < dom.hi.y)) throw Error(ErrorCode::BadChart, "empty domain");
  if (dom.hi.x - dom.lo.x >= 1.0 || dom.hi.y - dom.lo.y >= 1.0) {
    throw Error(ErrorCode::BadChart, "domain must be narrower than 1 in each coordinate");
  }
  if (chart.rectangles.size() != chart.displacements.size()) {
    throw Error(ErrorCode::BadChart, "one displacement per rectangle required");
  }
  if (chart.rectangles.empty()) throw Error(ErrorCode::BadChart, "no rectangles");
  for (std::size_t i = 0; i < chart.rectangles.size(); ++i) {
    const Box& r = chart.rectangles[i];
    if (!(r.lo.x < r.hi.x && r.lo.y < r.hi.y)) {
      throw Error(ErrorCode::BadChart, "rectangle " + std::to_string(i) + " is empty");
    }
    if (!dom.contains(r.lo) || !dom.contains(r.hi)) {
      throw Error(ErrorCode::BadChart, "rectangle " + std::to_string(i) + " leaves the domain");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Box& o = chart.rectangles[j];
      const bool apart = r.hi.x < o.lo.x || o.hi.x < r.lo.x || r.hi.y < o.lo.y || o.hi.y < r.lo.y;
      if (!apart) {
        throw Error(ErrorCode::BadChart, "rectangles " + std::to_string(j) + " and " + std::to_string(i) + " intersect");
      }
    }
  }
}

std::optional<std::pair<int, IntVec2>> locate(const RectangleChart& chart, Vec2 p) {
  const IntVec2 m{static_cast<std::int64_t>(std::floor(p.x - chart.domain.lo.x)),
                  static_cast<std::int64_t>(std::floor(p.y - chart.domain.lo.y))};
  const Vec2 q{p.x - static_cast<double>(m.x), p.y - static_cast<double>(m.y)};
  for (std::size_t i = 0; i < chart.rectangles.size(); ++i) {
    if (chart.rectangles[i].contains(q)) return std::make_pair(static_cast<int>(i), m);
  }
  return std::nullopt;
}

namespace {

// k x k points spanning the closed rectangle, boundary included; the centre for k = 1.
std::vector<Vec2> lattice(const Box& r, int k) {
  std::vector<Vec2> pts;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const double u = k == 1 ? 0.5 : static_cast<double>(a) / (k - 1);
      const double v = k == 1 ? 0.5 : static_cast<double>(b) / (k - 1);
      pts.push_back({r.lo.x + u * (r.hi.x - r.lo.x), r.lo.y + v * (r.hi.y - r.lo.y)});
    }
  }
  return pts;
}

}  // namespace

ChartReport verify_rotational_chart(const TorusLift& lift, const RectangleChart& chart, int samples_per_rect) {
  validate_chart(chart);
  if (samples_per_rect < 1) throw Error(ErrorCode::Invalid, "need at least one sample per rectangle");
  constexpr double kSlack = 1e-12;
  ChartReport rep;
  for (std::size_t i = 0; i < chart.rectangles.size(); ++i) {
    const Box& r = chart.rectangles[i];
    const Vec2 s{static_cast<double>(chart.displacements[i].x), static_cast<double>(chart.displacements[i].y)};
    for (const Vec2& p : lattice(r, samples_per_rect)) {
      const Vec2 img = lift(p);
      ++rep.samples;
      if (!chart.domain.contains(img - s, kSlack)) rep.violations.push_back({static_cast<int>(i), p, img});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

Itinerary itinerary(const TorusLift& lift, const RectangleChart& chart, Vec2 x, int n) {
  if (n < 1) throw Error(ErrorCode::Invalid, "itinerary length must be positive");
  auto here = locate(chart, x);
  if (!here) throw Error(ErrorCode::NotInChart, "starting point is not in any rectangle");
  Itinerary it;
  it.word.push_back(here->first);
  Vec2 p = x;
  for (int k = 1; k < n; ++k) {
    p = lift(p);
    if (!finite(p)) throw Error(ErrorCode::NonFinite, "orbit left the finite doubles");
    auto next = locate(chart, p);
    if (!next) break;
    it.word.push_back(next->first);
  }
  it.steps_valid = it.word.size();
  return it;
}

DisplacementReport check_displacement_bound(const TorusLift& lift, const RectangleChart& chart, Vec2 x, int n) {
  const Itinerary it = itinerary(lift, chart, x, n + 1);
  if (it.steps_valid < static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorCode::ItineraryTooShort, "orbit leaves the chart after " + std::to_string(it.steps_valid) +
                                                  " iterates; need " + std::to_string(n + 1));
  }
  DisplacementReport rep;
  rep.bound = 2.0 * chart.d_s();
  Vec2 p = x, symbolic = x;
  for (int k = 1; k <= n; ++k) {
    const IntVec2 s = chart.displacements[static_cast<std::size_t>(it.word[static_cast<std::size_t>(k - 1)])];
    symbolic = symbolic + Vec2{static_cast<double>(s.x), static_cast<double>(s.y)};
    p = lift(p);
    const double residual = norm(p - symbolic);
    rep.max_residual = std::max(rep.max_residual, residual);
    if (residual >= rep.bound && !rep.first_violation) rep.first_violation = k;
  }
  rep.pass = !rep.first_violation;
  return rep;
}

SegmentSweep displacement_sweep(const TorusLift& lift, const RectangleChart& chart, int samples_per_rect,
                                int max_len) {
  validate_chart(chart);
  if (samples_per_rect < 1 || max_len < 1) throw Error(ErrorCode::Invalid, "sweep needs positive sizes");
  SegmentSweep sweep;
  sweep.bound = 2.0 * chart.d_s();
  sweep.pass = true;
  for (const Box& r : chart.rectangles) {
    for (const Vec2& x : lattice(r, samples_per_rect)) {
      ++sweep.starts;
      const Itinerary it = itinerary(lift, chart, x, max_len + 1);
      const int n = static_cast<int>(it.steps_valid) - 1;
      if (n < 1) continue;
      const DisplacementReport rep = check_displacement_bound(lift, chart, x, n);
      ++sweep.segments;
      sweep.longest = std::max(sweep.longest, n);
      sweep.max_residual = std::max(sweep.max_residual, rep.max_residual);
      sweep.pass = sweep.pass && rep.pass;
    }
  }
  return sweep;
}

}  // namespace rotset
