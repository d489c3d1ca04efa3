#pragma once

#include <span>

#include "ktweb/core.hpp"

namespace ktweb {

/// The action induced on the six tensor parameters by the rigid motion g.
/// Leaves a6 untouched. Exactness: the result carries an exact representation
/// only when p is exact and g is built from a quarter-turn rotation with
/// exactly representable translations (see induced_action_exact).
KTParams induced_action(const GroupElement& g, const KTParams& p);

/// Exact variant for rotations by quarter_turns * pi/2 (quarter_turns in
/// {0,1,2,3}) and rational translations. Requires p.is_exact().
KTParams induced_action_exact(int quarter_turns, const Rat& a, const Rat& b, const KTParams& p);

/// Largest componentwise deviation over the samples between
/// kt_components(induced_action(g,p), g*x) and R * kt_components(p,x) * R^T,
/// with R the rotation part of g. Zero means the parameter action agrees
/// with the pushforward of the point action.
double pushforward_residual(const GroupElement& g, const KTParams& p, const KTParams& image,
                            std::span<const Point2> samples);

/// True iff the residual at every sample stays within tol.
bool pushforward_check(const GroupElement& g, const KTParams& p, std::span<const Point2> samples,
                       double tol);

}  // namespace ktweb
