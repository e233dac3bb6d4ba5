// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   ./build/tests/rotset_acceptance [--seed N]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotset/almost_periodic.hpp"
#include "rotset/decompose.hpp"
#include "rotset/io.hpp"
#include "rotset/oracle.hpp"
#include "rotset/polygon_engine.hpp"
#include "rotset/torus.hpp"
#include "support.hpp"

using namespace rotset;
using namespace rotset::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fixed(double v, int digits = 2) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::vector<std::pair<std::string, SftSystem>> instances(std::uint64_t seed) {
  std::vector<std::pair<std::string, SftSystem>> out;
  for (const char* name : {"full2.json", "two_cycle.json", "triangle.json"}) {
    out.emplace_back(name, io::system_from_json(io::read_json(data_path(name))));
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < 200; ++k) out.emplace_back("random#" + std::to_string(k), random_system(rng, 4, 3));
  return out;
}

Outcome criterion1(const std::vector<std::pair<std::string, SftSystem>>& systems) {
  const Timer timer;
  std::size_t mismatches = 0;
  std::string first;
  for (const auto& [name, sys] : systems) {
    const RationalPolygon fast = rotation_polygon(sys);
    const RationalPolygon brute = oracle_hull(sys, 12);
    if (!(fast == brute)) {
      if (mismatches++ == 0) first = name;
    }
  }
  const double t = timer.seconds();
  Outcome o;
  o.pass = mismatches == 0 && t < 60.0;
  o.detail = std::to_string(systems.size()) + " systems, n_max 12, " + std::to_string(mismatches) +
             " mismatches" + (first.empty() ? "" : " (first " + first + ")") + ", " + fixed(t) + " s (limit 60)";
  return o;
}

Outcome criterion2(const std::vector<std::pair<std::string, SftSystem>>& systems, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 2);
  std::size_t checks = 0, mismatches = 0;
  for (const auto& [name, sys] : systems) {
    const RationalPolygon poly = rotation_polygon(sys);
    for (int k = 0; k < 100; ++k) {
      const Rational2 w = random_direction(rng);
      Rational best = dot(w, poly.vertices().front());
      for (const auto& v : poly.vertices()) best = std::max(best, dot(w, v));
      ++checks;
      if (support_max(sys, w).value != best) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(checks) + " directions, " + std::to_string(mismatches) + " mismatches"};
}

Outcome criterion3(const std::vector<std::pair<std::string, SftSystem>>& systems, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 3);
  std::uniform_int_distribution<std::size_t> length(1, 60);
  std::size_t words = 0, failures = 0;
  for (const auto& [name, sys] : systems) {
    const RationalPolygon poly = rotation_polygon(sys);
    std::int64_t s_max_sq = 0;
    for (const auto& s : sys.displacements) s_max_sq = std::max(s_max_sq, dot(s, s));
    const auto a = static_cast<std::int64_t>(sys.alphabet_size);
    for (int k = 0; k < 10000; ++k) {
      const Word w = random_word(rng, sys, length(rng));
      const Decomposition d = decompose(sys, w);
      std::size_t len = d.remainder.size();
      IntVec2 total = psi(sys, d.remainder);
      bool ok = d.remainder.size() <= static_cast<std::size_t>(a - 1);
      for (const auto& c : d.cycles) {
        ok = ok && is_cycle(sys, c.word);
        len += c.length();
        total += psi(sys, c.word);
      }
      ok = ok && len == w.size() && total == psi(sys, w);
      const auto n = static_cast<std::int64_t>(w.size());
      const Rational2 m{Rational(total.x, n), Rational(total.y, n)};
      ok = ok && poly.squared_distance(m) <= Rational(4 * a * a * s_max_sq, n * n);
      ++words;
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(words) + " words, " + std::to_string(failures) + " failures"};
}

Outcome criterion4(const std::vector<std::pair<std::string, SftSystem>>& systems, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 4);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3);
  std::size_t checks = 0, failures = 0;
  for (const auto& [name, sys] : systems) {
    const RationalPolygon poly = rotation_polygon(sys);
    for (int n = 1; n <= 3; ++n) {
      ++checks;
      if (!(rotation_polygon(power_system(sys, n)) == poly.scaled(Rational(n)))) ++failures;
    }
    for (int k = 0; k < 20; ++k) {
      const IntMat2 L{entry(rng), entry(rng), entry(rng), entry(rng)};
      ++checks;
      if (!(rotation_polygon(apply_integer_linear(sys, L)) == poly.transformed(L))) ++failures;
    }
  }
  return {failures == 0, std::to_string(checks) + " identities, " + std::to_string(failures) + " failures"};
}

Outcome criterion5() {
  const Timer timer;
  const ApParams p = ap_params(Rational(3, 10), 6);
  int n_max = 0;
  while (n_max < p.depth && p.a(n_max + 1) <= BigInt(kDefaultSumCap)) ++n_max;
  const auto cps = checkpoint_bounds(p, n_max);

  const bool frozen = cps[2].mean == Rational(3, 32) && cps[2].mean < Rational(4, 32) &&
                      cps[3].mean == Rational(483, 512) && cps[3].mean > Rational(480, 512);
  bool general = true;
  std::string failed;
  for (const auto& c : cps) {
    if (c.n == 0) continue;
    if (!c.pass) {
      general = false;
      failed += (failed.empty() ? "" : ",") + std::to_string(c.n);
    }
  }
  const double t = timer.seconds();
  Outcome o;
  o.pass = frozen && general && t < 30.0;
  o.detail = std::string("S_32 = ") + cps[2].mean.str() + ", S_512 = " + cps[3].mean.str() + " (frozen " +
             (frozen ? "ok" : "MISMATCH") + "); inequality on n = 1.." + std::to_string(n_max) + ": " +
             (general ? "all hold" : "fails at n = " + failed) + "; " + fixed(t) + " s";
  return o;
}

Outcome criterion6() {
  bool pass = true;
  std::string detail;
  for (const Rational& delta : {Rational(1, 4), Rational(3, 10)}) {
    const ApParams p = ap_params(delta, 5);
    for (int n0 = 0; n0 <= 1; ++n0) {
      const WindowReport r = recurrence_window_check(p, n0, 100000);
      pass = pass && r.pass;
      if (!detail.empty()) detail += "; ";
      detail += "delta " + delta.str() + " n0 " + std::to_string(n0) + ": window " + std::to_string(r.window) + " " +
                (r.pass ? "ok" : "fails at " + std::to_string(*r.first_failure));
      if (!r.pass && r.min_sufficient_window) detail += " (needs " + std::to_string(*r.min_sufficient_window) + ")";
    }
  }
  return {pass, detail};
}

Outcome criterion7() {
  const ApParams p = ap_params(Rational(3, 10), 5);
  const RotationPointsReport r =
      symbolic_rotation_points(p, full_shift({{0, 0}, {1, 0}}), 512, 1, kDefaultSumCap, Rational(4, 512));
  const bool pass = r.min <= Rational(3, 32) && r.max >= Rational(483, 512) && r.dense;
  return {pass, "min " + r.min.str() + ", max " + r.max.str() + ", epsilon " + r.epsilon.str() +
                    " vs 2/sqrt(512) ~ " + fixed(2.0 / std::sqrt(512.0), 4)};
}

Outcome criterion8() {
  bool pass = true;
  std::string detail;

  const TorusLift translation = io::lift_from_json(io::read_json(data_path("translation.json")));
  const Vec2 v = std::get<TranslationLift>(translation.family()).v;
  const RotationEstimate est = estimate_rotation_set(translation, 8, 100);
  double err = 0.0;
  for (const auto& q : est.cloud) err = std::max(err, norm(q - v));
  pass = pass && err <= 1e-12;
  detail += "translation error " + sci(err);

  const auto grid = unit_grid(32);
  for (const char* name : {"translation.json", "standard.json", "demo_lift.json"}) {
    const TorusLift lift = io::lift_from_json(io::read_json(data_path(name)));
    const CauchyReport c = cauchy_check(lift, grid, 1000);
    pass = pass && c.pass;
    detail += std::string("; cauchy ") + lift.name() + " " + (c.pass ? "ok" : "FAIL") + " (ratio " +
              fixed(c.max_ratio, 3) + ")";
  }

  const TorusLift demo = io::lift_from_json(io::read_json(data_path("demo_lift.json")));
  const RectangleChart chart = io::chart_from_json(io::read_json(data_path("demo_chart.json")));
  const ChartReport cr = verify_rotational_chart(demo, chart, 41);
  const SegmentSweep sweep = displacement_sweep(demo, chart, 41, 50);
  pass = pass && cr.pass && sweep.pass && sweep.segments > 0;
  detail += std::string("; chart ") + (cr.pass ? "ok" : "FAIL") + "; displacement " + (sweep.pass ? "ok" : "FAIL") +
            " on " + std::to_string(sweep.segments) + " segments (residual " + sci(sweep.max_residual) +
            " < " + fixed(sweep.bound, 4) + ")";
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--seed") seed = std::stoull(argv[i + 1]);
  }
  const auto systems = instances(seed);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact polygon equals brute-force hull", [&] { return criterion1(systems); }},
      {"support function equivalence", [&] { return criterion2(systems, seed); }},
      {"decomposition conservation", [&] { return criterion3(systems, seed); }},
      {"power and linear equivariance", [&] { return criterion4(systems, seed); }},
      {"almost periodic checkpoints", criterion5},
      {"almost periodic recurrence windows", criterion6},
      {"rotation segment density", criterion7},
      {"simulator bounds", criterion8},
  };

  std::cout << "seed " << seed << "\n";
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << "  " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
