#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ktweb/rational.hpp"

namespace ktweb {

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Symmetric 2x2 matrix; k21 == k12 by construction.
struct SymMat2 {
  double k11 = 0.0;
  double k12 = 0.0;
  double k22 = 0.0;

  double trace() const { return k11 + k22; }
  double det() const { return k11 * k22 - k12 * k12; }
  /// Real eigenvalues, ascending.
  std::pair<double, double> eigenvalues() const;
};

/// Proper planar rigid motion: rotation by theta followed by translation (a, b).
/// theta is kept in (-pi, pi].
struct GroupElement {
  double theta = 0.0;
  double a = 0.0;
  double b = 0.0;

  static GroupElement identity() { return {}; }
};

/// Maps any angle to its representative in (-pi, pi].
double normalize_angle(double theta);

Point2 group_apply_point(const GroupElement& g, Point2 x);
/// Composition acting as: apply g1 first, then g2.
GroupElement group_compose(const GroupElement& g2, const GroupElement& g1);
GroupElement group_inverse(const GroupElement& g);

/// The six parameters a1..a6 of a Killing two-tensor on the Euclidean plane.
/// Carries an optional exact rational representation; when present, the
/// double values are its roundings and classification predicates are exact.
struct KTParams {
  std::array<double, 6> a{};
  std::optional<std::array<Rat, 6>> exact;

  /// Throws std::invalid_argument on non-finite entries.
  static KTParams from_doubles(const std::array<double, 6>& values);
  static KTParams from_rationals(const std::array<Rat, 6>& values);

  bool is_exact() const { return exact.has_value(); }
  /// 1-based accessor matching the a1..a6 naming.
  double alpha(int i) const { return a[static_cast<size_t>(i - 1)]; }
  const Rat& alpha_exact(int i) const { return (*exact)[static_cast<size_t>(i - 1)]; }
};

/// Tensor components at a point:
///   k11 = a1 + 2 a4 x2 + a6 x2^2
///   k12 = a3 - a4 x1 - a5 x2 - a6 x1 x2
///   k22 = a2 + 2 a5 x1 + a6 x1^2
SymMat2 kt_components(const KTParams& p, Point2 x);

/// Eigenvalues of kt_components(p, x), ascending.
std::pair<double, double> kt_eigenvalues(const KTParams& p, Point2 x);

}  // namespace ktweb
