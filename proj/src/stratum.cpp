#include "ktweb/stratum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ktweb {

namespace {

template <typename T>
std::array<T, 3> deltas_of(const std::array<T, 6>& a) {
  const T lead = a[5] * (a[0] - a[1]) - a[3] * a[3] + a[4] * a[4];
  const T cross = a[5] * a[2] + a[3] * a[4];
  const T gap = a[0] - a[1];
  return {lead * lead + 4 * cross * cross, a[5], gap * gap + 4 * a[2] * a[2]};
}

double inf_norm(const std::array<double, 6>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

// Relative magnitudes of (d1, d2, d3): each scaled by 1 + |alpha|_inf^deg
// with deg the degree of the invariant (4, 1, 2).
std::array<double, 3> relative_deltas(const KTParams& p, const Deltas& d) {
  const double n = std::max(1.0, inf_norm(p.a));
  const double n2 = n * n;
  return {std::abs(d.d1) / (1.0 + n2 * n2), std::abs(d.d2) / (1.0 + n),
          std::abs(d.d3) / (1.0 + n2)};
}

}  // namespace

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::E0: return "E0";
    case Stratum::E1: return "E1";
    case Stratum::E2: return "E2";
    case Stratum::E3P: return "E3P";
    case Stratum::E3EH: return "E3EH";
  }
  return "?";
}

const char* to_string(WebType w) {
  switch (w) {
    case WebType::MetricMultiple: return "MetricMultiple";
    case WebType::Cartesian: return "Cartesian";
    case WebType::Polar: return "Polar";
    case WebType::Parabolic: return "Parabolic";
    case WebType::EllipticHyperbolic: return "EllipticHyperbolic";
  }
  return "?";
}

Deltas deltas(const KTParams& p) {
  Deltas out;
  const auto d = deltas_of<double>(p.a);
  out.d1 = d[0];
  out.d2 = d[1];
  out.d3 = d[2];
  if (p.is_exact()) out.exact = deltas_of<Rat>(*p.exact);
  return out;
}

StratumLabel stratum(const KTParams& p) {
  StratumLabel label;
  label.deltas = deltas(p);
  label.exact = p.is_exact();

  const auto rel = relative_deltas(p, label.deltas);
  bool zero[3];
  if (label.exact) {
    for (int i = 0; i < 3; ++i) zero[i] = ((*label.deltas.exact)[i] == 0);
  } else {
    for (int i = 0; i < 3; ++i) zero[i] = rel[i] <= kZeroEps;
  }

  // Which invariants the classification consults: d1 always; then d2; d3
  // only when d1 = d2 = 0. A consulted invariant whose relative magnitude
  // falls inside (eps/10, 10*eps) could land on either side under noise of
  // order eps, so the real-backend label is marked degenerate.
  bool consulted[3] = {true, true, zero[0] && zero[1]};
  if (!label.exact) {
    for (int i = 0; i < 3; ++i) {
      if (consulted[i] && rel[i] > kZeroEps / 10.0 && rel[i] < kZeroEps * 10.0) {
        label.degenerate = true;
      }
    }
  }

  double margin = std::numeric_limits<double>::infinity();
  if (!zero[0]) {
    label.stratum = zero[1] ? Stratum::E3P : Stratum::E3EH;
    margin = std::min(rel[0], zero[1] ? margin : rel[1]);
  } else if (!zero[1]) {
    label.stratum = Stratum::E2;
    margin = rel[1];
  } else if (!zero[2]) {
    label.stratum = Stratum::E1;
    margin = rel[2];
  } else {
    label.stratum = Stratum::E0;
    margin = 0.0;
  }
  label.margin = margin;
  return label;
}

WebType web_type(Stratum s) {
  switch (s) {
    case Stratum::E0: return WebType::MetricMultiple;
    case Stratum::E1: return WebType::Cartesian;
    case Stratum::E2: return WebType::Polar;
    case Stratum::E3P: return WebType::Parabolic;
    case Stratum::E3EH: return WebType::EllipticHyperbolic;
  }
  return WebType::MetricMultiple;
}

WebType web_type(const KTParams& p) { return web_type(stratum(p).stratum); }

}  // namespace ktweb
