#include "ktweb/leaf.hpp"

#include <algorithm>
#include <cmath>

namespace ktweb {

namespace {

template <typename T>
std::vector<T> invariants_of(Stratum s, const std::array<T, 6>& a) {
  const T& a1 = a[0];
  const T& a2 = a[1];
  const T& a3 = a[2];
  const T& a4 = a[3];
  const T& a5 = a[4];
  const T& a6 = a[5];
  switch (s) {
    case Stratum::E0:
      return {a1};
    case Stratum::E1:
      return {a1 + a2, a3 * a3 - a1 * a2};
    case Stratum::E2:
      return {a6 * a1 - a4 * a4, a6};
    case Stratum::E3P:
      return {a4 * a4 + a5 * a5, 2 * a3 * a4 * a5 + a1 * a5 * a5 + a2 * a4 * a4};
    case Stratum::E3EH:
      return {a6, a6 * (a1 + a2) - a4 * a4 - a5 * a5,
              a6 * (a3 * a3 - a1 * a2) + a4 * a4 * a2 + 2 * a3 * a4 * a5 + a1 * a5 * a5};
  }
  return {};
}

bool close(double x, double y, double tol) {
  return std::abs(x - y) <= tol * (1.0 + std::max(std::abs(x), std::abs(y)));
}

}  // namespace

LeafLabel leaf_label(const KTParams& p) {
  LeafLabel label;
  label.stratum = stratum(p);
  label.invariants = invariants_of<double>(label.stratum.stratum, p.a);
  if (p.is_exact()) {
    label.exact = invariants_of<Rat>(label.stratum.stratum, *p.exact);
  }
  if (label.stratum.stratum == Stratum::E1) {
    if (p.is_exact()) {
      const auto& inv = *label.exact;
      label.e1_bound_violated = (4 * inv[1] + inv[0] * inv[0] <= 0);
    } else {
      const auto& inv = label.invariants;
      label.e1_bound_violated = (4.0 * inv[1] + inv[0] * inv[0] <= 0.0);
    }
  }
  return label;
}

bool equivalent(const KTParams& p, const KTParams& q, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tol must be non-negative");
  const LeafLabel lp = leaf_label(p);
  const LeafLabel lq = leaf_label(q);
  if (lp.stratum.stratum != lq.stratum.stratum) return false;
  if (lp.exact && lq.exact) return *lp.exact == *lq.exact;
  for (size_t i = 0; i < lp.invariants.size(); ++i) {
    if (!close(lp.invariants[i], lq.invariants[i], tol)) return false;
  }
  return true;
}

}  // namespace ktweb
