#pragma once

#include <array>

#include "ktweb/frame.hpp"
#include "ktweb/poly.hpp"

namespace ktweb {

/// The components (k11, k12, k22) of the tensor as exact polynomials in
/// (x1, x2). Real-backend parameters are converted exactly (doubles are
/// dyadic rationals), so the zero test stays decidable.
std::array<Poly2, 3> kt_component_polys(const KTParams& p, int max_degree = kDefaultMaxDegree);

/// The one-form K dV against the flat metric:
///   w1 = k11 d1V + k12 d2V,  w2 = k12 d1V + k22 d2V.
std::pair<Poly2, Poly2> kdv_one_form(const KTParams& p, const Poly2& V);

/// Compatibility condition: d(K dV) = 0, i.e. d1(w2) - d2(w1) is the zero
/// polynomial, decided exactly.
bool compatible(const KTParams& p, const Poly2& V);

/// The potential U of the quadratic first integral F = (1/2) K^{ij} p_i p_j + U,
/// with dU = K dV and U(0,0) = 0. Throws Incompatible when d(K dV) != 0.
Poly2 first_integral_potential(const KTParams& p, const Poly2& V);

struct SeparationReport {
  WebType web = WebType::MetricMultiple;
  FrameResult frame;
  /// V written in the canonical coordinates: transformed(x) = V(g^{-1} x).
  Poly2 transformed_potential;
  /// True when the frame rotation is not a quarter turn, so the transformed
  /// coefficients are correct only to about 1e-12 (the rotation entries pass
  /// through doubles).
  bool transformed_approximate = false;
  Poly2 first_integral;
};

/// End-to-end pipeline: compatibility check, classification, moving frame,
/// potential transported to the separable coordinates, first integral.
/// Throws Incompatible or DegenerateInput.
SeparationReport separate(const KTParams& p, const Poly2& V);

}  // namespace ktweb
