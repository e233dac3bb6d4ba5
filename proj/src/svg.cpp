#include <algorithm>
#include <limits>
#include <sstream>

#include "rotset/io.hpp"

namespace rotset::io {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 48.0;

struct Frame {
  double x0, y0, scale;

  double px(double x) const { return kMargin + (x - x0) * scale; }
  double py(double y) const { return kSize - kMargin - (y - y0) * scale; }
};

Frame fit(const std::vector<Vec2>& pts) {
  double lx = std::numeric_limits<double>::infinity(), ly = lx;
  double hx = -lx, hy = -lx;
  for (const auto& p : pts) {
    lx = std::min(lx, p.x);
    ly = std::min(ly, p.y);
    hx = std::max(hx, p.x);
    hy = std::max(hy, p.y);
  }
  double span = std::max(hx - lx, hy - ly);
  if (!(span > 0.0)) span = 1.0;
  const double cx = 0.5 * (lx + hx), cy = 0.5 * (ly + hy);
  span *= 1.1;
  return {cx - 0.5 * span, cy - 0.5 * span, (kSize - 2 * kMargin) / span};
}

void open(std::ostringstream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void outline(std::ostringstream& os, const Frame& f, const std::vector<Vec2>& hull, const char* stroke) {
  if (hull.size() == 1) {
    os << "<circle cx=\"" << f.px(hull[0].x) << "\" cy=\"" << f.py(hull[0].y) << "\" r=\"4\" fill=\"" << stroke
       << "\"/>\n";
    return;
  }
  os << "<polygon fill=\"" << stroke << "\" fill-opacity=\"0.15\" stroke=\"" << stroke
     << "\" stroke-width=\"1.5\" points=\"";
  for (const auto& v : hull) os << f.px(v.x) << ',' << f.py(v.y) << ' ';
  os << "\"/>\n";
}

}  // namespace

std::string polygon_svg(const RationalPolygon& poly) {
  std::vector<Vec2> pts;
  for (const auto& v : poly.vertices()) pts.push_back({v.x.to_double(), v.y.to_double()});
  const Frame f = fit(pts);

  std::ostringstream os;
  open(os);
  outline(os, f, pts, "#1f4e9c");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& v = poly.vertices()[i];
    os << "<circle cx=\"" << f.px(pts[i].x) << "\" cy=\"" << f.py(pts[i].y) << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << f.px(pts[i].x) + 6 << "\" y=\"" << f.py(pts[i].y) - 6
       << "\" font-family=\"monospace\" font-size=\"11\">(" << v.x.str() << ", " << v.y.str() << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string cloud_svg(const RotationEstimate& est) {
  std::vector<Vec2> pts = est.cloud;
  pts.insert(pts.end(), est.hull.begin(), est.hull.end());
  const Frame f = fit(pts);

  std::ostringstream os;
  open(os);
  for (const auto& p : est.cloud) {
    os << "<circle cx=\"" << f.px(p.x) << "\" cy=\"" << f.py(p.y) << "\" r=\"1.2\" fill=\"#555\"/>\n";
  }
  if (!est.hull.empty()) outline(os, f, est.hull, "#b03020");
  os << "</svg>\n";
  return os.str();
}

}  // namespace rotset::io
