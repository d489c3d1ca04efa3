#pragma once

#include <array>
#include <optional>

#include "ktweb/core.hpp"

namespace ktweb {

enum class Stratum { E0, E1, E2, E3P, E3EH };

enum class WebType { MetricMultiple, Cartesian, Polar, Parabolic, EllipticHyperbolic };

const char* to_string(Stratum s);
const char* to_string(WebType w);

/// The three stratifying invariants:
///   d1 = (a6(a1-a2) - a4^2 + a5^2)^2 + 4(a6 a3 + a4 a5)^2
///   d2 = a6
///   d3 = (a1-a2)^2 + 4 a3^2
struct Deltas {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  std::optional<std::array<Rat, 3>> exact;
};

Deltas deltas(const KTParams& p);

/// Orbit-dimension stratum:
///   E0: d1 = d2 = d3 = 0; E1: d1 = d2 = 0, d3 != 0; E2: d1 = 0, d2 != 0;
///   E3P: d1 != 0, a6 = 0; E3EH: d1 != 0, a6 != 0.
/// Zero tests are exact on the rational backend. On the real backend a value
/// counts as zero when |d| <= eps_zero * (1 + scale), with scale the infinity
/// norm of alpha raised to the degree of the invariant. `margin` is the
/// smallest relative magnitude among the invariants the classification
/// required to be nonzero (infinity-like large value for E0 on the exact
/// backend, 0.0 for E0 otherwise). `degenerate` flags real-backend inputs
/// whose consulted invariants fall inside the ambiguity band around the
/// zero threshold; frame computations refuse such inputs.
struct StratumLabel {
  Stratum stratum = Stratum::E0;
  Deltas deltas;
  double margin = 0.0;
  bool degenerate = false;
  bool exact = false;
};

constexpr double kZeroEps = 1e-9;

StratumLabel stratum(const KTParams& p);

/// E0 -> MetricMultiple, E1 -> Cartesian, E2 -> Polar, E3P -> Parabolic,
/// E3EH -> EllipticHyperbolic.
WebType web_type(const KTParams& p);
WebType web_type(Stratum s);

}  // namespace ktweb
