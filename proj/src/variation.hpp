#pragma once
#include <vector>

#include "torsion.hpp"

namespace tlab {

/// Torsion bundles along the support-function path h + t*phi. All samples
/// share one grid bounding box so that discretization error varies smoothly
/// in t and cancels in finite differences of T.
struct VariationPath {
  std::shared_ptr<const ConvexBody2D> base;
  TestFunction phi;
  std::vector<double> t;
  std::vector<TorsionBundle> bundles;

  std::vector<double> torsion_values() const;
};

/// Throws LeavesConvexCone when w + t (phi'' + phi) fails to stay positive
/// over the sampled range (checked analytically on a refined angle grid).
VariationPath sample_path(std::shared_ptr<const ConvexBody2D> body,
                          const TestFunction& phi, std::vector<double> t_list,
                          double delta, const TorsionOptions& opt = {});

/// Second variation f''(0) of f(t) = T(h + t*phi), assembled from boundary
/// fields in the 2D specialization (cofactor matrix = 1, kappa = 1/w):
///   term_curv = - int |grad U|^2 phi^2 d(theta)
///   term_udot = - 2 int phi (|grad U| / kappa) (grad Udot . nu) d(theta)
///   term_four = + 4 int phi^2 (|grad U| / kappa) d(theta)
///   term_grad = - int |grad U|^2 (phi')^2 d(theta)
/// where Udot is harmonic with boundary data |grad U| phi. The variant of
/// the Udot term carrying |grad U|^2 / kappa is reported alongside as a
/// diagnostic; it coincides on the disk but not on bodies with varying
/// boundary gradient.
struct SecondVariationBreakdown {
  double term_curv = 0.0;
  double term_udot = 0.0;
  double term_four = 0.0;
  double term_grad = 0.0;
  double total = 0.0;
  double term_udot_power2 = 0.0;
  double total_power2 = 0.0;
};

SecondVariationBreakdown second_variation(const TorsionBundle& bundle,
                                          const TestFunction& phi);

struct AdjointnessResult {
  double a12 = 0.0;  ///< int |grad U| phi1 (grad Udot2 . nu) w d(theta)
  double a21 = 0.0;
  double gap = 0.0;  ///< |a12 - a21| / max(|a12|, |a21|, scale)
  double scale = 0.0;
};

AdjointnessResult selfadjointness_check(const TorsionBundle& bundle,
                                        const TestFunction& phi1,
                                        const TestFunction& phi2);

/// Residuals of the boundary Hessian identities at the station theta:
///   r1 = (H t).t + kappa |grad U|
///   r2 = (H nu).nu - kappa |grad U| + 2
///   r3 = (H t).nu + kappa d|grad U|/d(theta)
/// H is evaluated at offsets {3, 4, 5} delta along the inward normal and
/// extrapolated to the boundary by a quadratic fit.
struct HessianResiduals {
  double r1 = 0.0, r2 = 0.0, r3 = 0.0;
  double scale = 1.0;  ///< kappa |grad U| + 2
  double max_scaled() const;
};

std::vector<HessianResiduals> hessian_boundary_identities(
    const TorsionBundle& bundle, const std::vector<double>& thetas);

}  // namespace tlab
