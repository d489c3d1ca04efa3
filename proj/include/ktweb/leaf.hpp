#pragma once

#include <optional>
#include <vector>

#include "ktweb/stratum.hpp"

namespace ktweb {

/// Complete invariant vector identifying the orbit (leaf) within a stratum:
///   E0:   (a1)
///   E1:   (a1 + a2, a3^2 - a1 a2)
///   E2:   (a6 a1 - a4^2, a6)
///   E3P:  (a4^2 + a5^2, 2 a3 a4 a5 + a1 a5^2 + a2 a4^2)
///   E3EH: (a6, a6(a1+a2) - a4^2 - a5^2,
///          a6(a3^2 - a1 a2) + a4^2 a2 + 2 a3 a4 a5 + a1 a5^2)
struct LeafLabel {
  StratumLabel stratum;
  std::vector<double> invariants;
  std::optional<std::vector<Rat>> exact;
  /// Genuine E1 points satisfy i2 > -i1^2/4 strictly; this flags labels
  /// violating that bound (possible only for data from outside the stratum).
  bool e1_bound_violated = false;
};

LeafLabel leaf_label(const KTParams& p);

/// True iff p and q lie on the same leaf: equal strata and equal invariant
/// vectors -- exactly when both carry exact values, within
/// |x - y| <= tol * (1 + max(|x|, |y|)) componentwise otherwise.
bool equivalent(const KTParams& p, const KTParams& q, double tol);

}  // namespace ktweb
