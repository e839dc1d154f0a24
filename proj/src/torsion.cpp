#include "torsion.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace tlab {

TorsionBundle compute_bundle(std::shared_ptr<const ConvexBody2D> body, double delta,
                             const TorsionOptions& opt,
                             const std::optional<Bounds>& locked_bounds) {
  TorsionBundle b;
  b.body = body;
  auto grid = std::make_shared<const CartesianGrid>(
      CartesianGrid::build(*body, delta, opt.grid, locked_bounds));
  b.solver = std::make_shared<const DirichletSolver>(*body, grid, opt.solver);
  b.U = b.solver->solve(-2.0, BoundaryField(body->nodes(), 0.0));

  b.gradmag = BoundaryField(body->nodes());
  for (int m = 0; m < body->nodes(); ++m) {
    const double dn = boundary_normal_derivative(b.U, *body, body->theta(m));
    b.gradmag[m] = -dn;
    if (!(b.gradmag[m] > 0.0)) {
      std::ostringstream os;
      os << "boundary gradient not positive at theta = " << body->theta(m)
         << " (value " << b.gradmag[m] << ")";
      fail(ErrorCode::SolveFailed, os.str());
    }
  }

  const auto grad = nodal_gradient(b.U);
  double energy = 0.0, mass = 0.0;
  for (int idx = 0; idx < grid->interior_count(); ++idx) {
    const double a = grid->cell_area(idx);
    energy += a * grad[idx].dot(grad[idx]);
    mass += a * b.U.values[idx];
  }
  b.T_energy = energy;
  b.T_mass = 2.0 * mass;
  b.T_boundary =
      0.25 * (b.gradmag * b.gradmag).integrate_weighted(body->h() * body->w());

  const double tmax = std::max({b.T_energy, b.T_mass, b.T_boundary});
  const double tmin = std::min({b.T_energy, b.T_mass, b.T_boundary});
  if (!(tmin > 0.0) || (tmax - tmin) / tmax > opt.crosscheck_tol) {
    std::ostringstream os;
    os << "torsion cross-check failed: T_energy = " << b.T_energy
       << ", T_mass = " << b.T_mass << ", T_boundary = " << b.T_boundary
       << " (tolerance " << opt.crosscheck_tol << ")";
    fail(ErrorCode::CrossCheckFailed, os.str());
  }
  return b;
}

BoundaryField torsional_measure_density(const TorsionBundle& bundle) {
  return bundle.gradmag * bundle.gradmag * bundle.body->w();
}

double first_variation(const TorsionBundle& bundle, const TestFunction& phi) {
  return torsional_measure_density(bundle).integrate_weighted(
      phi.sample(bundle.body->nodes()));
}

BoundaryField project_mean_zero(const TorsionBundle& bundle, const BoundaryField& psi) {
  const BoundaryField mu = torsional_measure_density(bundle);
  const double total = mu.integrate();
  const double mean = psi.integrate_weighted(mu) / total;
  BoundaryField r = psi;
  for (int m = 0; m < r.size(); ++m) r[m] -= mean;
  return r;
}

BoundaryField project_mean_zero(const TorsionBundle& bundle, const TestFunction& psi) {
  return project_mean_zero(bundle, psi.sample(bundle.body->nodes()));
}

}  // namespace tlab
