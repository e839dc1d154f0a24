#pragma once
#include <memory>

#include <Eigen/Sparse>

#include "boundary_field.hpp"
#include "body.hpp"
#include "grid.hpp"

namespace tlab {

struct SolverOptions {
  double residual_tol = 1e-10;  ///< relative, discrete 2-norm
};

/// Discrete solution of  Laplace(U) = f  in the body,  U = g  on the boundary.
struct FieldSolution {
  std::shared_ptr<const CartesianGrid> grid;
  Eigen::VectorXd values;  ///< one entry per interior node
  double rhs_f = 0.0;
  BoundaryField boundary_g;
  double residual_norm = 0.0;  ///< relative residual of the linear solve
};

/// Five-point Laplacian with Shortley-Weller shortened arms at irregular
/// nodes, factorized once per (body, grid) so additional boundary data
/// reuses the factorization. The system is not symmetric at irregular rows;
/// a sparse LU keeps the solve deterministic.
class DirichletSolver {
public:
  DirichletSolver(const ConvexBody2D& body, std::shared_ptr<const CartesianGrid> grid,
                  SolverOptions opt = {});

  /// Solve with constant right-hand side f and boundary data g sampled at
  /// the body's theta nodes (interpolated to cut points by periodic cubic
  /// interpolation).
  FieldSolution solve(double f, const BoundaryField& g) const;

  const CartesianGrid& grid() const { return *grid_; }
  std::shared_ptr<const CartesianGrid> grid_ptr() const { return grid_; }

private:
  std::shared_ptr<const CartesianGrid> grid_;
  SolverOptions opt_;
  Eigen::SparseMatrix<double> matrix_;
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

/// Bicubic interpolation of interior values at p. The 4x4 node block is
/// allowed to shift off-center near the boundary; throws PointOutsideStencil
/// when no fully interior block contains p.
double interpolate(const FieldSolution& sol, Vec2 p);

/// Outward normal derivative dU/dnu at F(theta) by the second-order
/// one-sided stencil along the inward normal with offset d = 2*delta:
///   (3 g - 4 U(p - d nu) + U(p - 2 d nu)) / (2 d).
/// For the torsion solution this is <= 0 and |grad U| = -dU/dnu.
double boundary_normal_derivative(const FieldSolution& sol, const ConvexBody2D& body,
                                  double theta);
BoundaryField boundary_normal_derivative_field(const FieldSolution& sol,
                                               const ConvexBody2D& body);

/// Fourth-order central differences of the bicubic interpolant.
/// Requires p at distance >= 3*delta from the boundary.
Vec2 interior_gradient(const FieldSolution& sol, const ConvexBody2D& body, Vec2 p);
SymMat2 interior_hessian(const FieldSolution& sol, const ConvexBody2D& body, Vec2 p);

/// Nodal gradient (central where both neighbors exist, shortened-arm
/// three-point formula against cut-point boundary values otherwise).
std::vector<Vec2> nodal_gradient(const FieldSolution& sol);

/// Sum of nodal values weighted by clipped cell areas.
double integrate_cells(const CartesianGrid& grid, const Eigen::VectorXd& nodal);

}  // namespace tlab
