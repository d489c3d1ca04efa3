#include "ktweb/frame.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ktweb {

namespace {

constexpr double kPi = std::numbers::pi;

struct Invariants {
  std::vector<double> v;
  std::optional<std::vector<Rat>> exact;
};

Invariants stratum_invariants(const KTParams& p) {
  LeafLabel label = leaf_label(p);
  return {label.invariants, label.exact};
}

KTParams make_canonical(const std::array<double, 6>& d,
                        const std::optional<std::array<Rat, 6>>& exact) {
  KTParams out = KTParams::from_doubles(d);
  if (exact) out = KTParams::from_rationals(*exact);
  return out;
}

KTParams canonical_from(const KTParams& p, const StratumLabel& label) {
  const double a1 = p.a[0];
  const double a6 = p.a[5];
  const Invariants inv = stratum_invariants(p);

  switch (label.stratum) {
    case Stratum::E0: {
      std::optional<std::array<Rat, 6>> ex;
      if (p.exact) ex = std::array<Rat, 6>{(*p.exact)[0], (*p.exact)[0], 0, 0, 0, 0};
      return make_canonical({a1, a1, 0, 0, 0, 0}, ex);
    }
    case Stratum::E1: {
      const auto [lo, hi] = kt_eigenvalues(p, {0.0, 0.0});
      std::optional<std::array<Rat, 6>> ex;
      if (inv.exact) {
        // eigenvalues (i1 -/+ sqrt(i1^2 + 4 i2)) / 2
        const Rat& i1 = (*inv.exact)[0];
        const Rat& i2 = (*inv.exact)[1];
        if (auto r = sqrt_exact(i1 * i1 + 4 * i2)) {
          ex = std::array<Rat, 6>{(i1 - *r) / 2, (i1 + *r) / 2, 0, 0, 0, 0};
        }
      }
      return make_canonical({lo, hi, 0, 0, 0, 0}, ex);
    }
    case Stratum::E2: {
      const double m = inv.v[0] / inv.v[1];
      std::optional<std::array<Rat, 6>> ex;
      if (inv.exact) {
        const Rat me = (*inv.exact)[0] / (*inv.exact)[1];
        ex = std::array<Rat, 6>{me, me, 0, 0, 0, (*inv.exact)[1]};
      }
      return make_canonical({m, m, 0, 0, 0, a6}, ex);
    }
    case Stratum::E3P: {
      const double m = inv.v[1] / inv.v[0];
      const double root = std::sqrt(inv.v[0]);
      std::optional<std::array<Rat, 6>> ex;
      if (inv.exact) {
        if (auto r = sqrt_exact((*inv.exact)[0])) {
          const Rat me = (*inv.exact)[1] / (*inv.exact)[0];
          ex = std::array<Rat, 6>{me, me, 0, 0, *r, 0};
        }
      }
      return make_canonical({m, m, 0, 0, root, 0}, ex);
    }
    case Stratum::E3EH: {
      const double i1 = inv.v[0];
      const double i2 = inv.v[1];
      const double i3 = inv.v[2];
      const double mid = i2 / (2.0 * i1);
      const double root = std::sqrt(i3 / i1 + mid * mid);
      const bool plus = i1 > 0.0;
      const double c1 = plus ? mid + root : mid - root;
      const double c2 = plus ? mid - root : mid + root;
      std::optional<std::array<Rat, 6>> ex;
      if (inv.exact) {
        const Rat& e1 = (*inv.exact)[0];
        const Rat& e2 = (*inv.exact)[1];
        const Rat& e3 = (*inv.exact)[2];
        const Rat me = e2 / (2 * e1);
        if (auto r = sqrt_exact(Rat(e3 / e1 + me * me))) {
          const Rat hi = plus ? Rat(me + *r) : Rat(me - *r);
          const Rat lo = plus ? Rat(me - *r) : Rat(me + *r);
          ex = std::array<Rat, 6>{hi, lo, 0, 0, 0, e1};
        }
      }
      return make_canonical({c1, c2, 0, 0, 0, i1}, ex);
    }
  }
  return p;
}

void require_regular(const StratumLabel& label) {
  if (label.degenerate) {
    throw DegenerateInput("stratum margin below threshold; classification ill-conditioned");
  }
}

bool exact_zero(const KTParams& p, int i) {
  return p.is_exact() ? (p.alpha_exact(i) == 0) : (p.alpha(i) == 0.0);
}

}  // namespace

const char* to_string(Chart c) {
  switch (c) {
    case Chart::FixedPoint: return "fixed-point";
    case Chart::E1_U1: return "U1";
    case Chart::E1_U2: return "U2";
    case Chart::E2_U: return "U";
    case Chart::E3P_U1: return "U1";
    case Chart::E3P_U2: return "U2";
    case Chart::E3EH_U1: return "U1";
    case Chart::E3EH_U2: return "U2";
    case Chart::E3EH_U3: return "U3";
    case Chart::E3EH_U4: return "U4";
  }
  return "?";
}

double angle_value(AngleKind k) {
  switch (k) {
    case AngleKind::Zero: return 0.0;
    case AngleKind::HalfPi: return kPi / 2.0;
    case AngleKind::Pi: return kPi;
    case AngleKind::NegHalfPi: return -kPi / 2.0;
    case AngleKind::Generic: break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

KTParams canonical_form(const KTParams& p) {
  const StratumLabel label = stratum(p);
  require_regular(label);
  return canonical_from(p, label);
}

FrameResult moving_frame(const KTParams& p) {
  const StratumLabel label = stratum(p);
  require_regular(label);

  FrameResult out;
  out.stratum = label;
  out.canonical = canonical_from(p, label);

  const double a1 = p.a[0], a2 = p.a[1], a3 = p.a[2];
  const double a4 = p.a[3], a5 = p.a[4], a6 = p.a[5];

  switch (label.stratum) {
    case Stratum::E0: {
      out.chart = Chart::FixedPoint;
      out.angle_kind = AngleKind::Zero;
      if (p.is_exact()) out.translation_exact = {Rat(0), Rat(0)};
      return out;
    }

    case Stratum::E1: {
      // Rotation diagonalizing the constant matrix with ascending diagonal:
      // 2*theta + atan2(2 a3, a1 - a2) = pi (mod 2 pi).
      out.chart = exact_zero(p, 3) ? Chart::E1_U2 : Chart::E1_U1;
      if (exact_zero(p, 3)) {
        out.angle_kind = (a1 > a2) ? AngleKind::HalfPi : AngleKind::Zero;
        out.frame.theta = angle_value(out.angle_kind);
      } else {
        double th = 0.5 * (kPi - std::atan2(2.0 * a3, a1 - a2));
        if (th > kPi / 2.0) th -= kPi;
        out.frame.theta = th;
        out.angle_kind = AngleKind::Generic;
      }
      if (p.is_exact()) out.translation_exact = {Rat(0), Rat(0)};
      return out;
    }

    case Stratum::E2: {
      out.chart = Chart::E2_U;
      out.angle_kind = AngleKind::Zero;
      out.frame.theta = 0.0;
      out.frame.a = a5 / a6;
      out.frame.b = a4 / a6;
      if (p.is_exact()) {
        out.translation_exact = {p.alpha_exact(5) / p.alpha_exact(6),
                                 p.alpha_exact(4) / p.alpha_exact(6)};
      }
      return out;
    }

    case Stratum::E3P: {
      out.chart = (a5 >= 0.0) ? Chart::E3P_U1 : Chart::E3P_U2;
      const double i1 = a4 * a4 + a5 * a5;
      const double theta = normalize_angle(-std::atan2(a4, a5));
      if (exact_zero(p, 4)) {
        out.angle_kind = (a5 > 0.0) ? AngleKind::Zero : AngleKind::Pi;
      } else if (exact_zero(p, 5)) {
        out.angle_kind = (a4 > 0.0) ? AngleKind::NegHalfPi : AngleKind::HalfPi;
      } else {
        out.angle_kind = AngleKind::Generic;
      }
      out.frame.theta =
          (out.angle_kind == AngleKind::Generic) ? theta : angle_value(out.angle_kind);
      // cos(2 theta) = (a5^2 - a4^2)/i1 and sin(2 theta) = -2 a4 a5 / i1 are
      // rational, so the translation is exact whenever sqrt(i1) is.
      const double c2 = (a5 * a5 - a4 * a4) / i1;
      const double s2 = -2.0 * a4 * a5 / i1;
      const double root = std::sqrt(i1);
      out.frame.a = -((a1 - a2) * c2 - 2.0 * a3 * s2) / (2.0 * root);
      out.frame.b = -((a1 - a2) * s2 / 2.0 + a3 * c2) / root;
      if (p.is_exact()) {
        const Rat e1 = p.alpha_exact(1), e2 = p.alpha_exact(2), e3 = p.alpha_exact(3);
        const Rat e4 = p.alpha_exact(4), e5 = p.alpha_exact(5);
        const Rat i1e = e4 * e4 + e5 * e5;
        if (auto r = sqrt_exact(i1e)) {
          const Rat c2e = (e5 * e5 - e4 * e4) / i1e;
          const Rat s2e = -2 * e4 * e5 / i1e;
          out.translation_exact = {-((e1 - e2) * c2e - 2 * e3 * s2e) / (2 * *r),
                                   -((e1 - e2) * s2e / 2 + e3 * c2e) / *r};
          out.frame.a = to_double(out.translation_exact->first);
          out.frame.b = to_double(out.translation_exact->second);
        }
      }
      return out;
    }

    case Stratum::E3EH: {
      const double i1 = a6 * (a1 - a2) - a4 * a4 + a5 * a5;
      const double i2 = a3 * a6 + a4 * a5;
      const bool iota2_zero = p.is_exact() ? (p.alpha_exact(3) * p.alpha_exact(6) +
                                                  p.alpha_exact(4) * p.alpha_exact(5) ==
                                              0)
                                           : (i2 == 0.0);
      double theta = 0.0;
      if (std::abs(i1) >= std::abs(i2)) {
        // chart by the dominant defining function, ties toward U1/U2
        const double t1 = -0.5 * std::atan(2.0 * i2 / i1);
        if (i1 > 0.0) {
          out.chart = Chart::E3EH_U1;
          theta = t1;
          if (iota2_zero) out.angle_kind = AngleKind::Zero;
        } else {
          out.chart = Chart::E3EH_U2;
          theta = (t1 > 0.0) ? t1 - kPi / 2.0 : t1 + kPi / 2.0;
          if (iota2_zero) out.angle_kind = AngleKind::HalfPi;
        }
      } else {
        const double t2 = 0.5 * std::atan(i1 / (2.0 * i2));
        if (i2 > 0.0) {
          out.chart = Chart::E3EH_U3;
          theta = t2 - kPi / 4.0;
        } else {
          out.chart = Chart::E3EH_U4;
          theta = t2 + kPi / 4.0;
        }
      }
      if (out.angle_kind != AngleKind::Generic) theta = angle_value(out.angle_kind);
      out.frame.theta = theta;
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      out.frame.a = (a5 * c - a4 * s) / a6;
      out.frame.b = (a4 * c + a5 * s) / a6;
      if (p.is_exact() && out.angle_kind != AngleKind::Generic) {
        const Rat e4 = p.alpha_exact(4), e5 = p.alpha_exact(5), e6 = p.alpha_exact(6);
        const int ce = (out.angle_kind == AngleKind::Zero) ? 1 : 0;
        const int se = (out.angle_kind == AngleKind::HalfPi) ? 1 : 0;
        out.translation_exact = {(e5 * ce - e4 * se) / e6, (e4 * ce + e5 * se) / e6};
        out.frame.a = to_double(out.translation_exact->first);
        out.frame.b = to_double(out.translation_exact->second);
      }
      return out;
    }
  }
  return out;
}

}  // namespace ktweb
