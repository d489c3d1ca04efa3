#include "ktweb/action.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ktweb {

namespace {

template <typename T>
std::array<T, 6> induced(const T& c, const T& s, const T& a, const T& b,
                         const std::array<T, 6>& p) {
  const T& a1 = p[0];
  const T& a2 = p[1];
  const T& a3 = p[2];
  const T& a4 = p[3];
  const T& a5 = p[4];
  const T& a6 = p[5];
  std::array<T, 6> out;
  out[0] = a1 * c * c + a2 * s * s - 2 * a3 * c * s - 2 * b * a4 * c - 2 * b * a5 * s + a6 * b * b;
  out[1] = a1 * s * s + a2 * c * c + 2 * a3 * c * s + 2 * a * a4 * s - 2 * a * a5 * c + a6 * a * a;
  out[2] = (a1 - a2) * s * c + a3 * (c * c - s * s) + (a4 * a + a5 * b) * c +
           (a5 * a - a4 * b) * s - a6 * a * b;
  out[3] = a4 * c + a5 * s - a6 * b;
  out[4] = a5 * c - a4 * s - a6 * a;
  out[5] = a6;
  return out;
}

}  // namespace

KTParams induced_action(const GroupElement& g, const KTParams& p) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  KTParams out;
  out.a = induced<double>(c, s, g.a, g.b, p.a);
  return out;
}

KTParams induced_action_exact(int quarter_turns, const Rat& a, const Rat& b, const KTParams& p) {
  if (!p.is_exact()) throw std::invalid_argument("exact action needs exact parameters");
  const int q = ((quarter_turns % 4) + 4) % 4;
  static constexpr int kCos[4] = {1, 0, -1, 0};
  static constexpr int kSin[4] = {0, 1, 0, -1};
  return KTParams::from_rationals(induced<Rat>(Rat(kCos[q]), Rat(kSin[q]), a, b, *p.exact));
}

double pushforward_residual(const GroupElement& g, const KTParams& p, const KTParams& image,
                            std::span<const Point2> samples) {
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  double worst = 0.0;
  for (const Point2& x : samples) {
    const SymMat2 k = kt_components(p, x);
    // R K R^T for the rotation part of g.
    const double r11 = c * (k.k11 * c - k.k12 * s) - s * (k.k12 * c - k.k22 * s);
    const double r12 = c * (k.k11 * s + k.k12 * c) - s * (k.k12 * s + k.k22 * c);
    const double r22 = s * (k.k11 * s + k.k12 * c) + c * (k.k12 * s + k.k22 * c);
    const SymMat2 got = kt_components(image, group_apply_point(g, x));
    worst = std::max({worst, std::abs(got.k11 - r11), std::abs(got.k12 - r12),
                      std::abs(got.k22 - r22)});
  }
  return worst;
}

bool pushforward_check(const GroupElement& g, const KTParams& p, std::span<const Point2> samples,
                       double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  return pushforward_residual(g, p, induced_action(g, p), samples) <= tol;
}

}  // namespace ktweb
