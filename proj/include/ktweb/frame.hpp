#pragma once

#include <optional>
#include <utility>

#include "ktweb/errors.hpp"
#include "ktweb/leaf.hpp"

namespace ktweb {

enum class Chart {
  FixedPoint,  // E0; every group element fixes the point
  E1_U1,       // a3 != 0
  E1_U2,       // a3 == 0
  E2_U,        // all of E2
  E3P_U1,      // a5 >= 0
  E3P_U2,      // a5 < 0
  E3EH_U1,     // iota1 > 0 dominant
  E3EH_U2,     // iota1 < 0 dominant
  E3EH_U3,     // iota2 > 0 dominant
  E3EH_U4,     // iota2 < 0 dominant
};

const char* to_string(Chart c);

/// Rotation angles for which the induced action stays rational.
enum class AngleKind { Generic, Zero, HalfPi, Pi, NegHalfPi };

double angle_value(AngleKind k);

/// The group element carrying p onto the stratum's cross-section, together
/// with the closed-form canonical parameters.
///
/// Cross-sections:
///   E1:   a3 = a4 = a5 = a6 = 0, a1 < a2
///   E2:   a2 = a1, a3 = a4 = a5 = 0, a6 != 0
///   E3P:  a2 = a1, a3 = a4 = a6 = 0, a5 > 0
///   E3EH: a3 = a4 = a5 = 0, a6 (a1 - a2) > 0
struct FrameResult {
  Chart chart = Chart::FixedPoint;
  StratumLabel stratum;
  GroupElement frame;
  AngleKind angle_kind = AngleKind::Generic;
  /// Exact (a, b) of the frame, available when the input is exact and the
  /// rotation is a quarter turn.
  std::optional<std::pair<Rat, Rat>> translation_exact;
  KTParams canonical;
};

/// Throws DegenerateInput for real-backend points too close to a stratum
/// boundary. E0 points are fixed; they get the identity frame.
FrameResult moving_frame(const KTParams& p);

/// Closed-form canonical parameters:
///   E0:   (a1, a1, 0, 0, 0, 0)
///   E1:   (lmin, lmax, 0, 0, 0, 0)            eigenvalues of the constant matrix
///   E2:   (i1/i2, i1/i2, 0, 0, 0, i2)         leaf invariants
///   E3P:  (i2/i1, i2/i1, 0, 0, sqrt(i1), 0)
///   E3EH: (m + r, m - r, 0, 0, 0, i1)  for i1 > 0, swapped for i1 < 0,
///         with m = i2/(2 i1), r = sqrt(i3/i1 + m^2).
/// Exact whenever the input is exact and the square root involved is a
/// perfect rational square.
KTParams canonical_form(const KTParams& p);

}  // namespace ktweb
