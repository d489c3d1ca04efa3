#pragma once

#include <string>
#include <vector>

#include "ktweb/frame.hpp"

namespace ktweb {

struct Rect {
  double x0 = -1.0;
  double y0 = -1.0;
  double x1 = 1.0;
  double y1 = 1.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  bool contains(Point2 p, double pad = 0.0) const {
    return p.x1 >= x0 - pad && p.x1 <= x1 + pad && p.x2 >= y0 - pad && p.x2 <= y1 + pad;
  }
};

using Polyline = std::vector<Point2>;

/// The two curve families of an orthogonal web, clipped to a region of the
/// original coordinates, plus the web's singular points (polar center,
/// parabolic focus, elliptic-hyperbolic foci).
struct WebPlot {
  Rect region;
  std::array<std::vector<Polyline>, 2> families;
  std::vector<Point2> singular_points;
};

/// Builds the canonical web curves of p's type (grid lines, circles and rays,
/// confocal parabolas, confocal ellipses and hyperbolas with foci at
/// (+-k, 0), k = sqrt((c1 - c2)/c6) from the canonical parameters) and maps
/// them back through the inverse frame into the original coordinates.
/// Each family contributes n_per_family curves that meet the region.
/// Requires stratum(p) != E0; throws DegenerateInput otherwise.
WebPlot web_curves(const KTParams& p, Rect region, int n_per_family, int samples_per_curve);

/// SVG 1.1 document: one path element per polyline with one stroke class per
/// family, circles at singular points. Throws std::runtime_error on IO failure.
void emit_svg(const WebPlot& plot, const std::string& path);
std::string render_svg(const WebPlot& plot);

/// CSV with header family,curve_index,x1,x2 (UTF-8, LF line endings).
void emit_csv(const WebPlot& plot, const std::string& path);
std::string render_csv(const WebPlot& plot);

}  // namespace ktweb
