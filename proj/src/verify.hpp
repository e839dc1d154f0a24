#pragma once
#include <memory>

#include "config.hpp"
#include "report.hpp"
#include "variation.hpp"

namespace tlab {

using BodyPtr = std::shared_ptr<const ConvexBody2D>;

/// Volume Brunn-Minkowski: V((1-t)A + tB)^(1/2) >= (1-t)V(A)^(1/2) + tV(B)^(1/2)
/// at m samples. gap = worst interior margin; equality metric = max chord
/// deviation. Area evaluation is exact for trig supports, so the tolerance
/// is absolute.
VerificationReport verify_bm_volume(const BodyPtr& A, const BodyPtr& B, int samples,
                                    const Config& cfg);

/// Torsion Brunn-Minkowski with exponent 1/4 (n = 2). Also reports the
/// maximal second difference of t -> T^(1/4) in the diagnostics.
VerificationReport verify_bm_torsion(const BodyPtr& A, const BodyPtr& B, int samples,
                                     const Config& cfg);

/// Concavity of T^(1/4) along h + t*phi over an automatically sized
/// symmetric range: all interior second differences must stay below
/// tol * f(0)^(1/4).
VerificationReport concavity_check(const BodyPtr& body, const TestFunction& phi,
                                   int samples, const Config& cfg);

/// The boundary-form and spherical-form Poincare inequality. Both
/// assemblies are computed from the same sampled fields; their agreement is
/// part of the report. kind selects which form provides lhs/rhs.
enum class PoincareForm { Boundary, Spherical };
VerificationReport verify_poincare(const BodyPtr& body, const TestFunction& psi,
                                   PoincareForm form, const Config& cfg);

/// Formula vs central finite difference for f'(0) (order 1) or the
/// four-term breakdown vs second difference for f''(0) (order 2).
VerificationReport verify_variation(const BodyPtr& body, const TestFunction& phi,
                                    int order, const Config& cfg);

/// Self-adjointness pairing gap of the Udot term.
VerificationReport verify_adjoint(const BodyPtr& body, const TestFunction& phi1,
                                  const TestFunction& phi2, const Config& cfg);

/// Boundary Hessian identity residuals at equispaced stations.
VerificationReport verify_hessian(const BodyPtr& body, int stations, const Config& cfg);

/// Detects whether B is a homothet of A (equal up to translation and
/// positive scaling), the equality case of both Brunn-Minkowski
/// inequalities.
VerificationReport equality_diagnostics(const BodyPtr& A, const BodyPtr& B,
                                        const Config& cfg);

}  // namespace tlab
