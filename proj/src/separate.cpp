#include "ktweb/separate.hpp"

#include <cmath>

namespace ktweb {

namespace {

Rat alpha_rat(const KTParams& p, int i) {
  return p.is_exact() ? p.alpha_exact(i) : rational_from_double(p.alpha(i));
}

}  // namespace

std::array<Poly2, 3> kt_component_polys(const KTParams& p, int max_degree) {
  const Rat a1 = alpha_rat(p, 1), a2 = alpha_rat(p, 2), a3 = alpha_rat(p, 3);
  const Rat a4 = alpha_rat(p, 4), a5 = alpha_rat(p, 5), a6 = alpha_rat(p, 6);
  Poly2 k11(max_degree), k12(max_degree), k22(max_degree);
  k11.set(0, 0, a1);
  k11.add_term(0, 1, 2 * a4);
  k11.add_term(0, 2, a6);
  k12.set(0, 0, a3);
  k12.add_term(1, 0, -a4);
  k12.add_term(0, 1, -a5);
  k12.add_term(1, 1, -a6);
  k22.set(0, 0, a2);
  k22.add_term(1, 0, 2 * a5);
  k22.add_term(2, 0, a6);
  return {k11, k12, k22};
}

std::pair<Poly2, Poly2> kdv_one_form(const KTParams& p, const Poly2& V) {
  const auto [k11, k12, k22] = kt_component_polys(p, V.max_degree());
  const Poly2 v1 = V.diff(1);
  const Poly2 v2 = V.diff(2);
  return {k11 * v1 + k12 * v2, k12 * v1 + k22 * v2};
}

bool compatible(const KTParams& p, const Poly2& V) {
  const auto [w1, w2] = kdv_one_form(p, V);
  return (w2.diff(1) - w1.diff(2)).is_zero();
}

Poly2 first_integral_potential(const KTParams& p, const Poly2& V) {
  const auto [w1, w2] = kdv_one_form(p, V);
  if (!(w2.diff(1) - w1.diff(2)).is_zero()) {
    throw Incompatible("d(K dV) != 0; the one-form has no potential");
  }
  // Integrate w1 in x1, then pick up the x1-free remainder of w2 in x2.
  Poly2 u(V.max_degree());
  for (const auto& [key, c] : w1.terms()) {
    u.add_term(key.first + 1, key.second, c / (key.first + 1));
  }
  const Poly2 rest = w2 - u.diff(2);
  for (const auto& [key, c] : rest.terms()) {
    // closedness makes the remainder a function of x2 alone
    if (key.first != 0) throw Incompatible("remainder depends on x1");
    u.add_term(0, key.second + 1, c / (key.second + 1));
  }
  return u;
}

SeparationReport separate(const KTParams& p, const Poly2& V) {
  SeparationReport report;
  report.first_integral = first_integral_potential(p, V);  // also checks compatibility
  report.frame = moving_frame(p);
  report.web = web_type(report.frame.stratum.stratum);

  // V in canonical coordinates: substitute the inverse motion, exactly for
  // quarter-turn rotations, through dyadic rotation entries otherwise.
  const GroupElement inv = group_inverse(report.frame.frame);
  Rat c(0), s(0);
  switch (report.frame.angle_kind) {
    case AngleKind::Zero: c = 1; break;
    case AngleKind::HalfPi: s = -1; break;        // cos/sin of -pi/2
    case AngleKind::Pi: c = -1; break;
    case AngleKind::NegHalfPi: s = 1; break;      // cos/sin of +pi/2
    case AngleKind::Generic:
      c = rational_from_double(std::cos(inv.theta));
      s = rational_from_double(std::sin(inv.theta));
      report.transformed_approximate = true;
      break;
  }
  Rat tx, ty;
  if (report.frame.translation_exact && !report.transformed_approximate) {
    // inverse translation = -R(-theta) (a, b)
    const Rat& fa = report.frame.translation_exact->first;
    const Rat& fb = report.frame.translation_exact->second;
    tx = -(c * fa - s * fb);
    ty = -(s * fa + c * fb);
  } else {
    tx = rational_from_double(inv.a);
    ty = rational_from_double(inv.b);
  }
  report.transformed_potential = V.compose_affine(c, s, tx, ty);
  return report;
}

}  // namespace ktweb
