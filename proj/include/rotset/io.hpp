#pragma once

// JSON, CSV and SVG surfaces. Rationals travel as reduced "p/q" strings and
// big integers as decimal strings.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "rotset/almost_periodic.hpp"
#include "rotset/decompose.hpp"
#include "rotset/oracle_compare.hpp"
#include "rotset/polygon.hpp"
#include "rotset/polygon_engine.hpp"
#include "rotset/sft.hpp"
#include "rotset/torus.hpp"

namespace rotset::io {

using nlohmann::json;

/// Reads and parses a JSON file; Error(Parse) on I/O or syntax errors.
json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const json& j);

json to_json(const SftSystem& sys);
/// Structural parse only; call validate_system for the semantic checks.
SftSystem system_from_json(const json& j);

json to_json(const Rational2& p);
Rational rational_from_json(const json& j);
Rational2 point_from_json(const json& j);

json to_json(const RationalPolygon& poly);
/// Parses and re-canonicalizes; Error(Parse) unless the stored form is already canonical.
RationalPolygon polygon_from_json(const json& j);

json to_json(const Cycle& c);
json to_json(const Decomposition& d);
json to_json(const OracleComparison& c);

json to_json(const Checkpoint& c);
json to_json(const WindowReport& r);
/// Summary only; the points themselves go to CSV.
json to_json(const RotationPointsReport& r);

json to_json(const TorusLift& lift);
TorusLift lift_from_json(const json& j);
json to_json(const RectangleChart& chart);
RectangleChart chart_from_json(const json& j);

/// "x,y,phi_x,phi_y" rows.
std::string cloud_csv(const RotationEstimate& est);

std::string polygon_svg(const RationalPolygon& poly);
std::string cloud_svg(const RotationEstimate& est);

}  // namespace rotset::io
