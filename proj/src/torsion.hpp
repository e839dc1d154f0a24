#pragma once
#include <memory>
#include <optional>

#include "solver.hpp"
#include "test_function.hpp"

namespace tlab {

struct TorsionOptions {
  SolverOptions solver;
  GridOptions grid;
  double crosscheck_tol = 1e-2;  ///< agreement among the three T routes
};

/// Torsion solution of a body together with the boundary gradient magnitude
/// and the torsional rigidity computed by three routes:
///   T_energy   = integral of |grad U|^2 over the body,
///   T_mass     = 2 * integral of U,
///   T_boundary = (1/4) * integral of h |grad U|^2 w d(theta)  (n = 2).
/// The three must agree within the cross-check tolerance or the bundle
/// refuses to exist. T_energy is the canonical value exposed as T().
struct TorsionBundle {
  std::shared_ptr<const ConvexBody2D> body;
  std::shared_ptr<const DirichletSolver> solver;
  FieldSolution U;
  BoundaryField gradmag;  ///< |grad U| at F(theta_m), positive
  double T_energy = 0.0;
  double T_mass = 0.0;
  double T_boundary = 0.0;

  double T() const { return T_energy; }
  double delta() const { return U.grid->delta(); }
  /// Harmonic extension with boundary data g (reuses the factorization).
  FieldSolution solve_harmonic(const BoundaryField& g) const { return solver->solve(0.0, g); }
};

TorsionBundle compute_bundle(std::shared_ptr<const ConvexBody2D> body, double delta,
                             const TorsionOptions& opt = {},
                             const std::optional<Bounds>& locked_bounds = {});

/// Density of the torsional measure against d(theta): |grad U|^2 w.
BoundaryField torsional_measure_density(const TorsionBundle& bundle);

/// First variation of T along the support perturbation phi:
///   integral of phi |grad U|^2 w d(theta).
double first_variation(const TorsionBundle& bundle, const TestFunction& phi);

/// psi minus its mean against the torsional measure; the projected field has
/// zero constraint integral to machine precision.
BoundaryField project_mean_zero(const TorsionBundle& bundle, const TestFunction& psi);
BoundaryField project_mean_zero(const TorsionBundle& bundle, const BoundaryField& psi);

}  // namespace tlab
