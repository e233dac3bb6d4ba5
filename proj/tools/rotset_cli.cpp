// rotset: command-line front end for the rotation-set library.
//
//   rotset polygon data/triangle.json --svg tri.svg
//   rotset oracle data/full2.json --n-max 10
//   rotset ap --delta 3/10 --depth 4 --horizon 512
//   rotset simulate data/demo_lift.json --chart data/demo_chart.json
//
// Every command prints one JSON document (or writes it to --out). Exit codes:
// 0 all checks pass, 1 a check failed, 2 parse error, 3 validation failure,
// 4 no cycles, 5 cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rotset/io.hpp"

using namespace rotset;
using io::json;

namespace {

struct RunConfig {
  std::string command;
  std::uint64_t cap_words = kDefaultWordCap;
  std::int64_t cap_sum = kDefaultSumCap;
  int depth = 5;
  std::uint64_t seed = 0;
  std::string svg;
  std::string out;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return 2;
    case ErrorCode::NoCycles: return 4;
    case ErrorCode::CapExceeded:
    case ErrorCode::DepthExceeded:
    case ErrorCode::Overflow: return 5;
    default: return 3;
  }
}

json header(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"seed", cfg.seed},
          {"caps", {{"words", cfg.cap_words}, {"sum", cfg.cap_sum}, {"depth", cfg.depth}}}};
}

void emit(const RunConfig& cfg, const json& doc) {
  if (cfg.out.empty()) {
    std::cout << io::dump(doc);
  } else {
    io::write_text(cfg.out, io::dump(doc));
  }
}

SftSystem load_system(const std::string& path) {
  SftSystem sys = io::system_from_json(io::read_json(path));
  const ValidationReport rep = validate_system(sys);
  if (!rep.ok()) {
    std::string msg = path + ":";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw Error(ErrorCode::Invalid, msg);
  }
  return sys;
}

template <class T>
T parse_value(const std::string& text, const char* what) {
  std::istringstream in(text);
  T v{};
  char extra = 0;
  if (!(in >> v) || (in >> extra)) throw Error(ErrorCode::Parse, std::string("bad ") + what + ": " + text);
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

Rational2 parse_direction(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::Parse, "direction must be 'x,y' with rational entries");
  return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

IntMat2 parse_matrix(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::Parse, "matrix must be 'a,b,c,d' (row-major)");
  return {parse_value<std::int64_t>(parts[0], "matrix entry"), parse_value<std::int64_t>(parts[1], "matrix entry"),
          parse_value<std::int64_t>(parts[2], "matrix entry"), parse_value<std::int64_t>(parts[3], "matrix entry")};
}

int cmd_polygon(const RunConfig& cfg, const std::string& path) {
  const SftSystem sys = load_system(path);
  const WitnessedPolygon wp = rotation_polygon_witnessed(sys);
  json doc = header(cfg);
  doc.update(io::to_json(wp.polygon));
  json witnesses = json::array();
  for (const auto& c : wp.witnesses) witnesses.push_back(io::to_json(c));
  doc["witnesses"] = witnesses;
  if (!cfg.svg.empty()) io::write_text(cfg.svg, io::polygon_svg(wp.polygon));
  emit(cfg, doc);
  return 0;
}

int cmd_support(const RunConfig& cfg, const std::string& path, const std::string& dir_text) {
  const SftSystem sys = load_system(path);
  const Rational2 dir = parse_direction(dir_text);
  const SupportResult res = support_max(sys, dir);
  const RationalPolygon poly = rotation_polygon(sys);
  const bool agrees = poly.support(dir) == res.value;
  json doc = header(cfg);
  doc["direction"] = io::to_json(dir);
  doc["value"] = res.value.str();
  doc["witness"] = io::to_json(res.witness);
  doc["witness_mean"] = io::to_json(mean(sys, res.witness));
  doc["matches_polygon"] = agrees;
  emit(cfg, doc);
  return agrees ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg, const std::string& path, int n_max) {
  const SftSystem sys = load_system(path);
  const OracleComparison cmp = compare_with_oracle(sys, n_max, cfg.cap_words);
  json doc = header(cfg);
  doc["n_max"] = n_max;
  doc.update(io::to_json(cmp));
  if (!cfg.svg.empty()) io::write_text(cfg.svg, io::polygon_svg(cmp.polygon.polygon));
  emit(cfg, doc);
  return cmp.pass ? 0 : 1;
}

int cmd_decompose(const RunConfig& cfg, const std::string& path, const std::string& word_text) {
  const SftSystem sys = load_system(path);
  const Word w = parse_word(word_text);
  const Decomposition d = decompose(sys, w);

  IntVec2 total = psi(sys, d.remainder);
  std::size_t length = d.remainder.size();
  for (const auto& c : d.cycles) {
    total += psi(sys, c.word);
    length += c.length();
  }
  const bool conserved = length == w.size() && total == psi(sys, w) &&
                         d.remainder.size() + 1 <= static_cast<std::size_t>(sys.alphabet_size);
  json doc = header(cfg);
  doc["word"] = w;
  doc.update(io::to_json(d));
  doc["conserved"] = conserved;
  emit(cfg, doc);
  return conserved ? 0 : 1;
}

int cmd_power(const RunConfig& cfg, const std::string& path, int n, std::size_t block_cap) {
  const SftSystem sys = load_system(path);
  std::vector<Word> blocks;
  const SftSystem pow = power_system(sys, n, block_cap, &blocks);
  const RationalPolygon base = rotation_polygon(sys);
  const RationalPolygon powered = rotation_polygon(pow);
  const bool scaled = powered == base.scaled(Rational(n));
  json doc = header(cfg);
  doc["n"] = n;
  doc["system"] = io::to_json(pow);
  doc["blocks"] = blocks;
  doc["polygon"] = io::to_json(powered);
  doc["base_polygon"] = io::to_json(base);
  doc["equals_scaled_base"] = scaled;
  emit(cfg, doc);
  return scaled ? 0 : 1;
}

int cmd_affine(const RunConfig& cfg, const std::string& path, const std::string& matrix_text) {
  const SftSystem sys = load_system(path);
  const IntMat2 L = parse_matrix(matrix_text);
  const SftSystem mapped = apply_integer_linear(sys, L);
  const RationalPolygon base = rotation_polygon(sys);
  const RationalPolygon image = rotation_polygon(mapped);
  const bool equivariant = image == base.transformed(L);
  json doc = header(cfg);
  doc["matrix"] = {L.a, L.b, L.c, L.d};
  doc["system"] = io::to_json(mapped);
  doc["polygon"] = io::to_json(image);
  doc["base_polygon"] = io::to_json(base);
  doc["equals_image_of_base"] = equivariant;
  emit(cfg, doc);
  return equivariant ? 0 : 1;
}

int cmd_ap(const RunConfig& cfg, const std::string& delta_text, std::optional<std::int64_t> horizon_opt,
           std::int64_t stride, std::int64_t scan) {
  const ApParams params = ap_params(Rational::parse(delta_text), cfg.depth);

  int n_max = 0;
  while (n_max < params.depth && params.a(n_max + 1) <= BigInt(cfg.cap_sum)) ++n_max;
  const auto checkpoints = checkpoint_bounds(params, n_max, cfg.cap_sum);

  const std::int64_t reachable = std::min<std::int64_t>(params.range() + 1, cfg.cap_sum);
  const std::int64_t scan_len = std::min(scan, reachable);
  std::vector<WindowReport> windows;
  for (int n0 = 0; n0 <= 1 && n0 + 1 <= params.depth; ++n0) {
    windows.push_back(recurrence_window_check(params, n0, static_cast<std::size_t>(scan_len), cfg.cap_sum));
  }

  const std::int64_t horizon = horizon_opt.value_or(params.schedule64[static_cast<std::size_t>(std::min(3, n_max))]);
  const SftSystem two = full_shift({{0, 0}, {1, 0}});
  const RotationPointsReport density = symbolic_rotation_points(params, two, horizon, stride, cfg.cap_sum);

  bool pass = density.dense;
  json cps = json::array();
  for (const auto& c : checkpoints) {
    cps.push_back(io::to_json(c));
    pass = pass && c.pass;
  }
  json win = json::array();
  for (std::size_t n0 = 0; n0 < windows.size(); ++n0) {
    json w = io::to_json(windows[n0]);
    w["n0"] = n0;
    win.push_back(w);
    pass = pass && windows[n0].pass;
  }
  json schedule = json::array();
  for (const auto& a : params.schedule) schedule.push_back(a.str());

  json doc = header(cfg);
  doc["delta"] = params.delta.str();
  doc["t"] = params.t;
  doc["schedule"] = schedule;
  doc["checkpoints"] = cps;
  doc["recurrence"] = win;
  doc["density"] = io::to_json(density);
  doc["pass"] = pass;
  emit(cfg, doc);
  return pass ? 0 : 1;
}

int cmd_simulate(const RunConfig& cfg, const std::string& lift_path, const std::string& chart_path, int grid, int n,
                 int cauchy_grid, int chart_samples, int segment, const std::string& csv) {
  const TorusLift lift = io::lift_from_json(io::read_json(lift_path));
  std::optional<RectangleChart> chart;
  if (!chart_path.empty()) {
    chart = io::chart_from_json(io::read_json(chart_path));
    validate_chart(*chart);
  }

  const RotationEstimate est = estimate_rotation_set(lift, grid, n);
  const auto samples = unit_grid(cauchy_grid);
  const CauchyReport cauchy = cauchy_check(lift, samples, n);

  std::vector<json> hull;
  for (const auto& v : est.hull) hull.push_back(json::array({v.x, v.y}));
  json doc = header(cfg);
  doc["lift"] = io::to_json(lift);
  doc["grid"] = grid;
  doc["n"] = n;
  doc["estimate"] = {{"points", est.cloud.size()}, {"hull", hull}, {"diameter", est.diameter}, {"tag", "estimate"}};
  doc["cauchy"] = {{"pass", cauchy.pass},
                   {"D", cauchy.bound_d},
                   {"K", cauchy.k_constant},
                   {"max_ratio", cauchy.max_ratio},
                   {"violations", cauchy.violations}};
  bool pass = cauchy.pass;
  int code = 0;

  if (chart) {
    const ChartReport rep = verify_rotational_chart(lift, *chart, chart_samples);
    json violations = json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
      const auto& v = rep.violations[i];
      violations.push_back({{"rectangle", v.rectangle},
                            {"point", json::array({v.point.x, v.point.y})},
                            {"image", json::array({v.image.x, v.image.y})}});
    }
    doc["chart"] = {{"pass", rep.pass},
                    {"samples", rep.samples},
                    {"violation_count", rep.violations.size()},
                    {"violations", violations},
                    {"d_s", chart->d_s()}};
    if (!rep.pass) {
      code = 3;
    } else {
      const SegmentSweep sweep = displacement_sweep(lift, *chart, chart_samples, segment);
      doc["displacement"] = {{"pass", sweep.pass},
                             {"bound", sweep.bound},
                             {"max_residual", sweep.max_residual},
                             {"starts", sweep.starts},
                             {"segments", sweep.segments},
                             {"longest", sweep.longest}};
      pass = pass && sweep.pass;
    }
  }
  doc["pass"] = pass && code == 0;

  if (!csv.empty()) io::write_text(csv, io::cloud_csv(est));
  if (!cfg.svg.empty()) io::write_text(cfg.svg, io::cloud_svg(est));
  emit(cfg, doc);
  if (code != 0) {
    std::cerr << "rotset: chart is not rotational for this lift\n";
    return code;
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rotation polygons of subshifts, almost periodic sequences and torus-lift estimates"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--cap-words", cfg.cap_words, "Word-enumeration cap for the brute-force oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-sum", cfg.cap_sum, "Summation cap for almost periodic sequences")->check(CLI::PositiveNumber);
  app.add_option("--depth", cfg.depth, "Schedule depth for almost periodic sequences")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed recorded in every output");
  app.add_option("--svg", cfg.svg, "Also write an SVG rendering to this path");
  app.add_option("-o,--out", cfg.out, "Write the JSON report here instead of stdout");

  std::string system_path, word, direction, matrix, delta = "3/10", lift_path, chart_path, csv;
  int n_max = 10, power = 2, grid = 16, steps = 1000, cauchy_grid = 32, chart_samples = 21, segment = 50;
  std::size_t block_cap = kDefaultBlockCap;
  std::optional<std::int64_t> horizon;
  std::int64_t stride = 1, scan = 100000;

  auto* polygon = app.add_subcommand("polygon", "Exact rotation polygon of a system");
  polygon->add_option("system", system_path, "System JSON")->required();

  auto* support = app.add_subcommand("support", "Support function value and witness cycle");
  support->add_option("system", system_path, "System JSON")->required();
  support->add_option("--dir", direction, "Direction as 'x,y' with entries p/q")->required();

  auto* oracle = app.add_subcommand("oracle", "Compare the polygon with brute-force word enumeration");
  oracle->add_option("system", system_path, "System JSON")->required();
  oracle->add_option("--n-max", n_max, "Longest word length")->check(CLI::PositiveNumber);

  auto* dec = app.add_subcommand("decompose", "Split a word into cycles and a short remainder");
  dec->add_option("system", system_path, "System JSON")->required();
  dec->add_option("--word", word, "Word as digits ('0121') or comma list ('0,1,2')")->required();

  auto* pow = app.add_subcommand("power", "Block system of n-words and its polygon");
  pow->add_option("system", system_path, "System JSON")->required();
  pow->add_option("-n", power, "Block length")->check(CLI::PositiveNumber);
  pow->add_option("--block-cap", block_cap, "Maximum number of blocks")->check(CLI::PositiveNumber);

  auto* aff = app.add_subcommand("affine", "Apply an integer matrix to the displacements");
  aff->add_option("system", system_path, "System JSON")->required();
  aff->add_option("--matrix", matrix, "Row-major entries 'a,b,c,d'")->required();

  auto* ap = app.add_subcommand("ap", "Almost periodic sequence checkpoints, recurrence and density");
  ap->add_option("--delta", delta, "delta in (0, 1] as p/q");
  ap->add_option("--horizon", horizon, "Density horizon (default a_3)")->check(CLI::PositiveNumber);
  ap->add_option("--stride", stride, "Density stride")->check(CLI::PositiveNumber);
  ap->add_option("--scan", scan, "Scan length for the recurrence check")->check(CLI::PositiveNumber);

  auto* sim = app.add_subcommand("simulate", "Orbit-average estimate, Cauchy bound and chart checks");
  sim->add_option("lift", lift_path, "Lift JSON")->required();
  sim->add_option("--chart", chart_path, "Rectangle chart JSON");
  sim->add_option("--grid", grid, "Starting grid resolution")->check(CLI::Range(2, 4096));
  sim->add_option("-n", steps, "Iterations")->check(CLI::PositiveNumber);
  sim->add_option("--cauchy-grid", cauchy_grid, "Grid for the Cauchy check")->check(CLI::PositiveNumber);
  sim->add_option("--chart-samples", chart_samples, "Lattice size per rectangle")->check(CLI::PositiveNumber);
  sim->add_option("--segment", segment, "Longest orbit segment for the displacement check")
      ->check(CLI::PositiveNumber);
  sim->add_option("--csv", csv, "Write the point cloud as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*polygon) {
      cfg.command = "polygon";
      return cmd_polygon(cfg, system_path);
    }
    if (*support) {
      cfg.command = "support";
      return cmd_support(cfg, system_path, direction);
    }
    if (*oracle) {
      cfg.command = "oracle";
      return cmd_oracle(cfg, system_path, n_max);
    }
    if (*dec) {
      cfg.command = "decompose";
      return cmd_decompose(cfg, system_path, word);
    }
    if (*pow) {
      cfg.command = "power";
      return cmd_power(cfg, system_path, power, block_cap);
    }
    if (*aff) {
      cfg.command = "affine";
      return cmd_affine(cfg, system_path, matrix);
    }
    if (*ap) {
      cfg.command = "ap";
      return cmd_ap(cfg, delta, horizon, stride, scan);
    }
    cfg.command = "simulate";
    return cmd_simulate(cfg, lift_path, chart_path, grid, steps, cauchy_grid, chart_samples, segment, csv);
  } catch (const Error& e) {
    std::cerr << "rotset: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "rotset: " << e.what() << "\n";
    return 3;
  }
}
