#include "ktweb/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ktweb {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::pair<double, double> SymMat2::eigenvalues() const {
  const double mid = 0.5 * (k11 + k22);
  const double half_gap = 0.5 * (k11 - k22);
  const double radius = std::hypot(half_gap, k12);
  return {mid - radius, mid + radius};
}

double normalize_angle(double theta) {
  double r = std::remainder(theta, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Point2 group_apply_point(const GroupElement& g, Point2 x) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  return {x.x1 * c - x.x2 * s + g.a, x.x1 * s + x.x2 * c + g.b};
}

GroupElement group_compose(const GroupElement& g2, const GroupElement& g1) {
  const double c = std::cos(g2.theta);
  const double s = std::sin(g2.theta);
  GroupElement out;
  out.theta = normalize_angle(g1.theta + g2.theta);
  out.a = g1.a * c - g1.b * s + g2.a;
  out.b = g1.a * s + g1.b * c + g2.b;
  return out;
}

GroupElement group_inverse(const GroupElement& g) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  GroupElement out;
  out.theta = normalize_angle(-g.theta);
  out.a = -(g.a * c + g.b * s);
  out.b = -(-g.a * s + g.b * c);
  return out;
}

KTParams KTParams::from_doubles(const std::array<double, 6>& values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("tensor parameters must be finite");
  }
  KTParams p;
  p.a = values;
  return p;
}

KTParams KTParams::from_rationals(const std::array<Rat, 6>& values) {
  KTParams p;
  p.exact = values;
  for (size_t i = 0; i < 6; ++i) {
    p.a[i] = to_double(values[i]);
    if (!std::isfinite(p.a[i])) throw std::invalid_argument("tensor parameter out of range");
  }
  return p;
}

SymMat2 kt_components(const KTParams& p, Point2 x) {
  SymMat2 m;
  m.k11 = p.a[0] + 2.0 * p.a[3] * x.x2 + p.a[5] * x.x2 * x.x2;
  m.k12 = p.a[2] - p.a[3] * x.x1 - p.a[4] * x.x2 - p.a[5] * x.x1 * x.x2;
  m.k22 = p.a[1] + 2.0 * p.a[4] * x.x1 + p.a[5] * x.x1 * x.x1;
  return m;
}

std::pair<double, double> kt_eigenvalues(const KTParams& p, Point2 x) {
  return kt_components(p, x).eigenvalues();
}

}  // namespace ktweb
