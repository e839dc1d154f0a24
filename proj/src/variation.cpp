#include "variation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"

namespace tlab {

std::vector<double> VariationPath::torsion_values() const {
  std::vector<double> v;
  v.reserve(bundles.size());
  for (const auto& b : bundles) v.push_back(b.T());
  return v;
}

VariationPath sample_path(std::shared_ptr<const ConvexBody2D> body,
                          const TestFunction& phi, std::vector<double> t_list,
                          double delta, const TorsionOptions& opt) {
  if (t_list.empty()) fail(ErrorCode::InvalidArgument, "empty sample list");
  std::sort(t_list.begin(), t_list.end());
  const TrigPoly& h = body->support();
  const TrigPoly& p = phi.coeffs();

  // Linear in t, so positivity over [t_min, t_max] holds iff it holds at the
  // endpoints; check on a refined angle grid.
  const int fine = 4 * body->nodes();
  const double margin = 1e-8 * h.c0;
  for (double t : {t_list.front(), t_list.back()}) {
    for (int m = 0; m < fine; ++m) {
      const double th = 2.0 * M_PI * m / fine;
      const double w = h.second_plus_self(th) + t * p.second_plus_self(th);
      if (w <= margin) {
        std::ostringstream os;
        os << "h + t*phi leaves the convex cone at t = " << t
           << " (w = " << w << " at theta = " << th << ")";
        fail(ErrorCode::LeavesConvexCone, os.str());
      }
    }
  }

  VariationPath path;
  path.base = body;
  path.phi = phi;
  path.t = t_list;

  std::vector<std::shared_ptr<const ConvexBody2D>> bodies;
  Bounds box = body->bounds();
  for (double t : t_list) {
    auto bt = std::make_shared<const ConvexBody2D>(
        ConvexBody2D::validate(TrigPoly::combine(h, 1.0, p, t), body->nodes()));
    box = box.merged(bt->bounds());
    bodies.push_back(std::move(bt));
  }
  path.bundles.reserve(bodies.size());
  for (const auto& bt : bodies)
    path.bundles.push_back(compute_bundle(bt, delta, opt, box));
  return path;
}

SecondVariationBreakdown second_variation(const TorsionBundle& bundle,
                                          const TestFunction& phi) {
  const ConvexBody2D& body = *bundle.body;
  const int n = body.nodes();
  const BoundaryField f = phi.sample(n);
  const BoundaryField fp = phi.sample_deriv(n);
  const BoundaryField& gm = bundle.gradmag;
  const BoundaryField& w = body.w();

  const FieldSolution udot = bundle.solve_harmonic(gm * f);
  const BoundaryField udot_n = boundary_normal_derivative_field(udot, body);

  SecondVariationBreakdown r;
  r.term_curv = -(gm * gm * f * f).integrate();
  r.term_udot = -2.0 * (f * gm * w * udot_n).integrate();
  r.term_four = 4.0 * (f * f * gm * w).integrate();
  r.term_grad = -(gm * gm * fp * fp).integrate();
  r.total = r.term_curv + r.term_udot + r.term_four + r.term_grad;
  r.term_udot_power2 = -2.0 * (f * gm * gm * w * udot_n).integrate();
  r.total_power2 = r.term_curv + r.term_udot_power2 + r.term_four + r.term_grad;
  return r;
}

AdjointnessResult selfadjointness_check(const TorsionBundle& bundle,
                                        const TestFunction& phi1,
                                        const TestFunction& phi2) {
  const ConvexBody2D& body = *bundle.body;
  const int n = body.nodes();
  const BoundaryField f1 = phi1.sample(n);
  const BoundaryField f2 = phi2.sample(n);
  const BoundaryField& gm = bundle.gradmag;
  const BoundaryField& w = body.w();

  const FieldSolution u1 = bundle.solve_harmonic(gm * f1);
  const FieldSolution u2 = bundle.solve_harmonic(gm * f2);
  const BoundaryField n1 = boundary_normal_derivative_field(u1, body);
  const BoundaryField n2 = boundary_normal_derivative_field(u2, body);

  AdjointnessResult r;
  r.a12 = (gm * f1 * n2 * w).integrate();
  r.a21 = (gm * f2 * n1 * w).integrate();
  r.scale = std::sqrt((f1 * f1 * gm * w).integrate() * (f2 * f2 * gm * w).integrate());
  r.gap = std::abs(r.a12 - r.a21) /
          std::max({std::abs(r.a12), std::abs(r.a21), r.scale, 1e-300});
  return r;
}

double HessianResiduals::max_scaled() const {
  return std::max({std::abs(r1), std::abs(r2), std::abs(r3)}) / scale;
}

std::vector<HessianResiduals> hessian_boundary_identities(
    const TorsionBundle& bundle, const std::vector<double>& thetas) {
  const ConvexBody2D& body = *bundle.body;
  const double delta = bundle.delta();
  const BoundaryField dgm = bundle.gradmag.spectral_derivative();

  std::vector<HessianResiduals> out;
  out.reserve(thetas.size());
  for (double th : thetas) {
    const Vec2 nu(std::cos(th), std::sin(th));
    const Vec2 tg(-std::sin(th), std::cos(th));
    const Vec2 F = body.boundary_point_at(th);
    SymMat2 H[3];
    for (int k = 0; k < 3; ++k)
      H[k] = interior_hessian(bundle.U, body, F - (3.0 + k) * delta * nu);
    // Quadratic extrapolation from s = 3, 4, 5 (units of delta) to s = 0.
    SymMat2 H0;
    H0.xx = 10.0 * H[0].xx - 15.0 * H[1].xx + 6.0 * H[2].xx;
    H0.xy = 10.0 * H[0].xy - 15.0 * H[1].xy + 6.0 * H[2].xy;
    H0.yy = 10.0 * H[0].yy - 15.0 * H[1].yy + 6.0 * H[2].yy;

    const double w = body.support().second_plus_self(th);
    const double kappa = 1.0 / w;
    const double gm = bundle.gradmag.interp_cubic(th);
    const double gm_prime = dgm.interp_cubic(th);

    HessianResiduals r;
    r.r1 = H0.quad(tg) + kappa * gm;
    r.r2 = H0.quad(nu) - kappa * gm + 2.0;
    r.r3 = H0.apply(tg).dot(nu) + kappa * gm_prime;
    r.scale = kappa * gm + 2.0;
    out.push_back(r);
  }
  return out;
}

}  // namespace tlab
