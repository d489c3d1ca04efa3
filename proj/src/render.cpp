#include "ktweb/render.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "ktweb/format.hpp"

namespace ktweb {

namespace {

constexpr double kPi = std::numbers::pi;

// Curvilinear coordinates (w1, w2) of the canonical web, chosen so that the
// two families are exactly the level sets of w1 and of w2.
struct WebCoords {
  WebType web = WebType::Cartesian;
  double k = 1.0;  // focal half-distance, elliptic-hyperbolic only

  std::array<double, 2> forward(Point2 p) const {
    switch (web) {
      case WebType::Cartesian:
        return {p.x1, p.x2};
      case WebType::Polar:
        return {std::hypot(p.x1, p.x2), std::atan2(p.x2, p.x1)};
      case WebType::Parabolic: {
        const double r = std::hypot(p.x1, p.x2);
        const double sigma = std::sqrt(std::max(0.0, r + p.x1));
        const double tau = std::copysign(std::sqrt(std::max(0.0, r - p.x1)), p.x2);
        return {sigma, tau};
      }
      case WebType::EllipticHyperbolic: {
        const std::complex<double> w = std::acosh(std::complex<double>(p.x1 / k, p.x2 / k));
        return {w.real(), w.imag()};
      }
      default:
        return {p.x1, p.x2};
    }
  }

  Point2 back(double w1, double w2) const {
    switch (web) {
      case WebType::Cartesian:
        return {w1, w2};
      case WebType::Polar:
        return {w1 * std::cos(w2), w1 * std::sin(w2)};
      case WebType::Parabolic:
        return {0.5 * (w1 * w1 - w2 * w2), w1 * w2};
      case WebType::EllipticHyperbolic:
        return {k * std::cosh(w1) * std::cos(w2), k * std::sinh(w1) * std::sin(w2)};
      default:
        return {w1, w2};
    }
  }
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double span() const { return hi - lo; }
};

Range spread(std::vector<double> values) {
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  Range r{*lo, *hi};
  if (!(r.span() > 0.0)) r.hi = r.lo + 1.0;
  return r;
}

std::vector<double> quantile_levels(const Range& r, int n) {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(r.lo + r.span() * (i + 0.5) / n);
  return out;
}

// Levels for an angular coordinate: quantiles of the arc actually covered by
// the samples (the complement of the largest circular gap), or an even
// spread over the whole circle when the samples leave no usable gap.
std::vector<double> angular_levels(std::vector<double> angles, int n) {
  std::sort(angles.begin(), angles.end());
  double gap = 2.0 * kPi - (angles.back() - angles.front());
  double arc_start = angles.front();
  double arc_len = angles.back() - angles.front();
  for (size_t i = 1; i < angles.size(); ++i) {
    const double g = angles[i] - angles[i - 1];
    if (g > gap) {
      gap = g;
      arc_start = angles[i];
      arc_len = 2.0 * kPi - g;
    }
  }
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n));
  if (gap < 0.2 || arc_len <= 0.0) {
    for (int i = 0; i < n; ++i) out.push_back(-kPi + 2.0 * kPi * (i + 0.5) / n);
  } else {
    for (int i = 0; i < n; ++i) {
      out.push_back(normalize_angle(arc_start + arc_len * (i + 0.5) / n));
    }
  }
  return out;
}

void nudge_away_from(std::vector<double>& levels, double bad, double eps, double step) {
  for (double& v : levels) {
    if (std::abs(v - bad) < eps) v += step;
  }
}

// Points sampled along one curve, clipped to the region. Each contiguous run
// inside the region becomes a polyline; closed traversals are stitched across
// the sample wrap-around.
void clip_and_append(std::vector<Point2> pts, bool closed, const Rect& region,
                     std::vector<Polyline>& sink) {
  const double pad = 1e-9 * (std::abs(region.width()) + std::abs(region.height()));
  const size_t n = pts.size();
  std::vector<bool> keep(n);
  size_t kept = 0;
  for (size_t i = 0; i < n; ++i) {
    keep[i] = region.contains(pts[i], pad) && std::isfinite(pts[i].x1) && std::isfinite(pts[i].x2);
    kept += keep[i] ? 1 : 0;
  }
  if (kept < 2) return;
  if (closed && kept == n) {
    pts.push_back(pts.front());
    sink.push_back(std::move(pts));
    return;
  }
  size_t start = 0;
  if (closed) {
    while (start < n && keep[start]) ++start;  // a dropped sample exists here
  }
  Polyline run;
  for (size_t step = 0; step < n; ++step) {
    const size_t i = (start + step) % n;
    if (keep[i]) {
      run.push_back(pts[i]);
    } else if (run.size() >= 2) {
      sink.push_back(std::move(run));
      run.clear();
    } else {
      run.clear();
    }
  }
  if (run.size() >= 2) sink.push_back(std::move(run));
}

}  // namespace

WebPlot web_curves(const KTParams& p, Rect region, int n_per_family, int samples_per_curve) {
  if (n_per_family < 1) throw std::invalid_argument("n_per_family must be >= 1");
  if (samples_per_curve < 2) throw std::invalid_argument("samples_per_curve must be >= 2");
  if (region.x1 < region.x0) std::swap(region.x0, region.x1);
  if (region.y1 < region.y0) std::swap(region.y0, region.y1);

  const FrameResult fr = moving_frame(p);
  if (fr.stratum.stratum == Stratum::E0) {
    throw DegenerateInput("metric multiples generate no orthogonal web");
  }
  const WebType web = web_type(fr.stratum.stratum);
  const GroupElement to_canonical = fr.frame;
  const GroupElement to_original = group_inverse(fr.frame);

  WebCoords coords;
  coords.web = web;
  if (web == WebType::EllipticHyperbolic) {
    coords.k = std::sqrt((fr.canonical.a[0] - fr.canonical.a[1]) / fr.canonical.a[5]);
  }

  // Probe the region on a grid; the curve levels and traversal ranges come
  // from the w-coordinates the region actually covers.
  constexpr int kGrid = 21;
  std::vector<double> w1s, w2s;
  w1s.reserve(kGrid * kGrid);
  w2s.reserve(kGrid * kGrid);
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Point2 x{region.x0 + region.width() * i / (kGrid - 1),
                     region.y0 + region.height() * j / (kGrid - 1)};
      const auto w = coords.forward(group_apply_point(to_canonical, x));
      if (std::isfinite(w[0]) && std::isfinite(w[1])) {
        w1s.push_back(w[0]);
        w2s.push_back(w[1]);
      }
    }
  }
  if (w1s.empty()) throw std::invalid_argument("region maps to no finite web coordinates");

  const bool w2_mirrored = (web == WebType::Parabolic || web == WebType::EllipticHyperbolic);
  if (w2_mirrored) {
    for (double& v : w2s) v = std::abs(v);
  }
  Range r1 = spread(w1s);
  Range r2 = spread(w2s);

  std::vector<double> levels1 = quantile_levels(r1, n_per_family);
  std::vector<double> levels2;
  if (web == WebType::Polar) {
    levels2 = angular_levels(w2s, n_per_family);
  } else {
    levels2 = quantile_levels(r2, n_per_family);
  }

  // Keep levels off the degenerate members of each family.
  const double step2 = std::max(r2.span(), 1e-6) * 0.25 / n_per_family;
  switch (web) {
    case WebType::Parabolic:
      nudge_away_from(levels2, 0.0, 1e-9 * (1.0 + r2.span()), step2);
      break;
    case WebType::EllipticHyperbolic: {
      const double eps = 1e-6;
      nudge_away_from(levels2, 0.0, eps, step2);
      nudge_away_from(levels2, kPi, eps, -step2);
      const double step1 = std::max(r1.span(), 1e-6) * 0.25 / n_per_family;
      nudge_away_from(levels1, 0.0, 1e-9 * (1.0 + r1.span()), step1);
      break;
    }
    default:
      break;
  }

  WebPlot plot;
  plot.region = region;

  const auto emit_curve = [&](int family, double level, Range t, bool closed, bool symmetric) {
    if (symmetric) t = Range{-t.hi, t.hi};
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(samples_per_curve));
    for (int i = 0; i < samples_per_curve; ++i) {
      const double tt = closed ? -kPi + 2.0 * kPi * i / samples_per_curve
                               : t.lo + t.span() * i / (samples_per_curve - 1);
      const auto canonical_pt =
          (family == 0) ? coords.back(level, tt) : coords.back(tt, level);
      pts.push_back(group_apply_point(to_original, canonical_pt));
    }
    clip_and_append(std::move(pts), closed, region, plot.families[static_cast<size_t>(family)]);
  };

  const auto padded = [](Range r, double frac, bool clamp_nonneg) {
    const double pad = r.span() * frac;
    Range out{r.lo - pad, r.hi + pad};
    if (clamp_nonneg) out.lo = std::max(out.lo, 0.0);
    return out;
  };

  switch (web) {
    case WebType::Cartesian:
      for (double c : levels1) emit_curve(0, c, padded(r2, 0.07, false), false, false);
      for (double c : levels2) emit_curve(1, c, padded(r1, 0.07, false), false, false);
      break;
    case WebType::Polar:
      for (double c : levels1) emit_curve(0, c, Range{}, true, false);          // circles
      for (double c : levels2) emit_curve(1, c, padded(r1, 0.07, true), false, false);  // rays
      break;
    case WebType::Parabolic:
      for (double c : levels1) emit_curve(0, c, padded(r2, 0.07, false), false, true);
      for (double c : levels2) emit_curve(1, c, padded(r1, 0.07, true), false, true);
      break;
    case WebType::EllipticHyperbolic:
      for (double c : levels1) emit_curve(0, c, Range{}, true, false);  // ellipses
      for (double c : levels2) emit_curve(1, c, padded(r1, 0.07, true), false, true);
      break;
    default:
      break;
  }

  switch (web) {
    case WebType::Polar:
    case WebType::Parabolic:
      plot.singular_points.push_back(group_apply_point(to_original, {0.0, 0.0}));
      break;
    case WebType::EllipticHyperbolic:
      plot.singular_points.push_back(group_apply_point(to_original, {-coords.k, 0.0}));
      plot.singular_points.push_back(group_apply_point(to_original, {coords.k, 0.0}));
      break;
    default:
      break;
  }
  return plot;
}

std::string render_svg(const WebPlot& plot) {
  const Rect& r = plot.region;
  const double scale = std::min(r.width(), r.height());
  const auto f = [](double v) { return fmt_double_sig(v, 9); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + f(r.x0) + " " +
         f(-r.y1) + " " + f(r.width()) + " " + f(r.height()) + "\">\n";
  out += "<style>.fam0{fill:none;stroke:#13527e;stroke-width:" + f(0.004 * scale) +
         ";}.fam1{fill:none;stroke:#a33327;stroke-width:" + f(0.004 * scale) +
         ";}.sing{fill:#000000;}</style>\n";
  for (size_t family = 0; family < 2; ++family) {
    for (const Polyline& line : plot.families[family]) {
      out += "<path class=\"fam" + std::to_string(family) + "\" d=\"";
      for (size_t i = 0; i < line.size(); ++i) {
        out += (i == 0 ? "M " : " L ");
        out += f(line[i].x1) + " " + f(-line[i].x2);
      }
      out += "\"/>\n";
    }
  }
  for (const Point2& s : plot.singular_points) {
    out += "<circle class=\"sing\" cx=\"" + f(s.x1) + "\" cy=\"" + f(-s.x2) + "\" r=\"" +
           f(0.012 * scale) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_csv(const WebPlot& plot) {
  std::string out = "family,curve_index,x1,x2\n";
  for (size_t family = 0; family < 2; ++family) {
    for (size_t idx = 0; idx < plot.families[family].size(); ++idx) {
      for (const Point2& pt : plot.families[family][idx]) {
        out += std::to_string(family) + "," + std::to_string(idx) + "," + fmt_double(pt.x1) + "," +
               fmt_double(pt.x2) + "\n";
      }
    }
  }
  return out;
}

namespace {
void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  file << content;
  if (!file) throw std::runtime_error("write failed: " + path);
}
}  // namespace

void emit_svg(const WebPlot& plot, const std::string& path) { write_file(path, render_svg(plot)); }
void emit_csv(const WebPlot& plot, const std::string& path) { write_file(path, render_csv(plot)); }

}  // namespace ktweb
