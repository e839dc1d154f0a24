#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "error.hpp"

namespace tlab {

namespace {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string body_sig(const ConvexBody2D& b) {
  std::ostringstream os;
  os.precision(12);
  os << "trig:c0=" << b.support().c0 << ",K=" << b.support().degree()
     << ",N=" << b.nodes();
  return os.str();
}

std::vector<double> linspace(double a, double b, int m) {
  std::vector<double> t(m);
  for (int j = 0; j < m; ++j) t[j] = a + (b - a) * j / (m - 1);
  return t;
}

}  // namespace

VerificationReport verify_bm_volume(const BodyPtr& A, const BodyPtr& B, int samples,
                                    const Config& cfg) {
  if (samples < 3) fail(ErrorCode::InvalidArgument, "need at least 3 samples");
  Stopwatch sw;
  const auto limits = cfg.body_limits();
  std::vector<double> root_v(samples);
  const auto ts = linspace(0.0, 1.0, samples);
  for (int j = 0; j < samples; ++j) {
    const auto C = ConvexBody2D::minkowski(*A, *B, 1.0 - ts[j], ts[j], limits);
    root_v[j] = std::sqrt(C.area());
  }
  double gap = 1e300, maxdev = 0.0;
  for (int j = 1; j + 1 < samples; ++j) {
    const double chord = (1.0 - ts[j]) * root_v.front() + ts[j] * root_v.back();
    const double dev = root_v[j] - chord;
    gap = std::min(gap, dev);
    maxdev = std::max(maxdev, std::abs(dev));
  }
  VerificationReport r;
  r.check = "bm_volume";
  r.inputs = {{"body_a", body_sig(*A)}, {"body_b", body_sig(*B)},
              {"samples", num(samples)}};
  r.lhs = root_v[samples / 2];  // representative midpoint values
  r.rhs = 0.5 * (root_v.front() + root_v.back());
  r.gap = gap;
  r.tol = cfg.tolerance("bm_volume.violation");
  r.verdict = classify(gap, r.tol, maxdev, cfg.tolerance("bm_volume.equality"));
  r.diagnostics = {{"max_chord_deviation", maxdev},
                   {"V_a", root_v.front() * root_v.front()},
                   {"V_b", root_v.back() * root_v.back()}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport verify_bm_torsion(const BodyPtr& A, const BodyPtr& B, int samples,
                                     const Config& cfg) {
  if (samples < 3) fail(ErrorCode::InvalidArgument, "need at least 3 samples");
  Stopwatch sw;
  const auto limits = cfg.body_limits();
  const auto opt = cfg.torsion_options();
  const auto ts = linspace(0.0, 1.0, samples);

  std::vector<std::shared_ptr<const ConvexBody2D>> combos;
  Bounds box = A->bounds().merged(B->bounds());
  for (double t : ts) {
    auto C = std::make_shared<const ConvexBody2D>(
        ConvexBody2D::minkowski(*A, *B, 1.0 - t, t, limits));
    box = box.merged(C->bounds());
    combos.push_back(std::move(C));
  }
  std::vector<double> g(samples);
  for (int j = 0; j < samples; ++j)
    g[j] = std::pow(compute_bundle(combos[j], cfg.delta, opt, box).T(), 0.25);

  const double scale = std::max(g.front(), g.back());
  double gap = 1e300, maxdev = 0.0, max_d2 = -1e300;
  for (int j = 1; j + 1 < samples; ++j) {
    const double chord = (1.0 - ts[j]) * g.front() + ts[j] * g.back();
    gap = std::min(gap, g[j] - chord);
    maxdev = std::max(maxdev, std::abs(g[j] - chord));
    max_d2 = std::max(max_d2, g[j + 1] - 2.0 * g[j] + g[j - 1]);
  }
  VerificationReport r;
  r.check = "bm_torsion";
  r.inputs = {{"body_a", body_sig(*A)}, {"body_b", body_sig(*B)},
              {"samples", num(samples)}, {"delta", num(cfg.delta)}};
  r.lhs = g[samples / 2];
  r.rhs = 0.5 * (g.front() + g.back());
  r.gap = gap;
  r.tol = cfg.tolerance("bm_torsion.violation") * scale;
  r.verdict = classify(gap, r.tol, maxdev / scale, cfg.tolerance("bm_torsion.equality"));
  r.diagnostics = {{"max_chord_deviation_rel", maxdev / scale},
                   {"max_second_difference", max_d2},
                   {"T_a", std::pow(g.front(), 4)},
                   {"T_b", std::pow(g.back(), 4)}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport concavity_check(const BodyPtr& body, const TestFunction& phi,
                                   int samples, const Config& cfg) {
  if (samples < 3) fail(ErrorCode::InvalidArgument, "need at least 3 samples");
  if (samples % 2 == 0) ++samples;  // keep t = 0 in the sample set
  Stopwatch sw;

  // Largest symmetric range keeping w + t (phi'' + phi) comfortably positive.
  const TrigPoly& h = body->support();
  const TrigPoly& p = phi.coeffs();
  const int fine = 4 * body->nodes();
  double wmin = 1e300;
  for (int m = 0; m < fine; ++m)
    wmin = std::min(wmin, h.second_plus_self(2.0 * M_PI * m / fine));
  const double margin = 0.2 * wmin;
  double t_plus = 0.625, t_minus = 0.625;
  for (int m = 0; m < fine; ++m) {
    const double th = 2.0 * M_PI * m / fine;
    const double q = p.second_plus_self(th);
    const double room = h.second_plus_self(th) - margin;
    if (q < 0.0) t_plus = std::min(t_plus, room / (-q));
    if (q > 0.0) t_minus = std::min(t_minus, room / q);
  }
  const double t_max = 0.8 * std::min(t_plus, t_minus);
  if (t_max < 1e-3)
    fail(ErrorCode::LeavesConvexCone, "no usable symmetric range for this direction");

  const auto path =
      sample_path(body, phi, linspace(-t_max, t_max, samples), cfg.delta,
                  cfg.torsion_options());
  const auto f = path.torsion_values();
  std::vector<double> g(f.size());
  for (size_t j = 0; j < f.size(); ++j) g[j] = std::pow(f[j], 0.25);

  const double scale = g[samples / 2];
  double max_d2 = -1e300, max_abs_d2 = 0.0;
  for (int j = 1; j + 1 < samples; ++j) {
    const double d2 = g[j + 1] - 2.0 * g[j] + g[j - 1];
    max_d2 = std::max(max_d2, d2);
    max_abs_d2 = std::max(max_abs_d2, std::abs(d2));
  }
  VerificationReport r;
  r.check = "concavity";
  r.inputs = {{"body", body_sig(*body)}, {"phi", phi.spec()},
              {"samples", num(samples)}, {"delta", num(cfg.delta)}};
  r.lhs = max_d2;
  r.rhs = 0.0;
  r.gap = -max_d2;
  r.tol = cfg.tolerance("concavity.violation") * scale;
  r.verdict = classify(r.gap, r.tol, max_abs_d2, r.tol);
  r.diagnostics = {{"t_max", t_max}, {"f0", f[samples / 2]},
                   {"max_abs_second_difference", max_abs_d2}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport verify_poincare(const BodyPtr& body, const TestFunction& psi,
                                   PoincareForm form, const Config& cfg) {
  Stopwatch sw;
  auto bundle = compute_bundle(body, cfg.delta, cfg.torsion_options());
  const int n = body->nodes();

  const BoundaryField psit = project_mean_zero(bundle, psi);
  const BoundaryField mu = torsional_measure_density(bundle);
  double abs_psi_mass = 0.0;
  for (int m = 0; m < n; ++m) abs_psi_mass += std::abs(psit[m]) * mu[m];
  abs_psi_mass *= 2.0 * M_PI / n;
  const double constraint = std::abs(psit.integrate_weighted(mu));
  if (abs_psi_mass > 0.0 &&
      constraint > cfg.tolerance("poincare.constraint") * abs_psi_mass)
    fail(ErrorCode::ConstraintNotMet, "mean-zero projection residual too large");

  // The derivative of the projected field equals the derivative of psi.
  const BoundaryField dpsi =
      psi.is_trig_like() ? psi.sample_deriv(n) : psit.spectral_derivative();

  const BoundaryField& gm = bundle.gradmag;
  const BoundaryField& w = body->w();
  BoundaryField kappa(n), psi_s(n), inv_kappa(n);
  for (int m = 0; m < n; ++m) {
    kappa[m] = 1.0 / w[m];
    inv_kappa[m] = w[m];
    psi_s[m] = dpsi[m] / w[m];
  }

  const FieldSolution udot = bundle.solve_harmonic(gm * psit);
  const BoundaryField udot_n = boundary_normal_derivative_field(udot, *body);

  // Boundary form, with dH = w d(theta), II = kappa, psi_s the arc-length
  // derivative.
  const double b1 = -(kappa * psit * psit * gm * gm * w).integrate();
  const double b2 = -2.0 * (psit * udot_n * gm * w).integrate();
  const double b3 = 4.0 * (psit * psit * gm * w).integrate();
  const double lhs_b = b1 + b2 + b3;
  const double rhs_b = (inv_kappa * psi_s * psi_s * gm * gm * w).integrate();

  // Spherical form (cofactor matrix is 1 in 2D).
  const double s1 = -(gm * gm * psit * psit).integrate();
  const double s2 = -2.0 * (psit * w * gm * udot_n).integrate();
  const double s3 = 4.0 * (psit * psit * w * gm).integrate();
  const double lhs_s = s1 + s2 + s3;
  const double rhs_s = (gm * gm * dpsi * dpsi).integrate();

  const double s2_p2 = -2.0 * (psit * w * gm * gm * udot_n).integrate();
  const double lhs_p2 = s1 + s2_p2 + s3;

  const double lhs = form == PoincareForm::Boundary ? lhs_b : lhs_s;
  const double rhs = form == PoincareForm::Boundary ? rhs_b : rhs_s;
  const double scale = std::abs(lhs) + std::abs(rhs);
  const double cross =
      std::max(std::abs(lhs_s - lhs_b), std::abs(rhs_s - rhs_b)) /
      std::max(scale, 1e-300);

  VerificationReport r;
  r.check = form == PoincareForm::Boundary ? "poincare_boundary" : "poincare_spherical";
  r.inputs = {{"body", body_sig(*body)}, {"psi", psi.spec()},
              {"delta", num(cfg.delta)}};
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = rhs - lhs;
  r.tol = cfg.tolerance("poincare.violation") * scale;
  if (scale < 1e-300) {
    r.verdict = Verdict::Equality;
  } else {
    r.verdict = classify(r.gap, r.tol, std::abs(r.gap),
                         cfg.tolerance("poincare.equality") * scale);
  }
  r.diagnostics = {{"term_curvature", s1},
                   {"term_udot", s2},
                   {"term_four", s3},
                   {"term_udot_power2", s2_p2},
                   {"lhs_power2", lhs_p2},
                   {"gap_power2", rhs_s - lhs_p2},
                   {"crossform_rel", cross},
                   {"constraint_residual", abs_psi_mass > 0.0 ? constraint / abs_psi_mass : 0.0},
                   {"T", bundle.T()}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport verify_variation(const BodyPtr& body, const TestFunction& phi,
                                    int order, const Config& cfg) {
  if (order != 1 && order != 2)
    fail(ErrorCode::InvalidArgument, "variation order must be 1 or 2");
  Stopwatch sw;
  const auto opt = cfg.torsion_options();
  auto bundle = compute_bundle(body, cfg.delta, opt);
  const double mu_total = torsional_measure_density(bundle).integrate();

  VerificationReport r;
  r.inputs = {{"body", body_sig(*body)}, {"phi", phi.spec()},
              {"delta", num(cfg.delta)}, {"order", num(order)}};

  if (order == 1) {
    const double formula = first_variation(bundle, phi);
    const double eps = cfg.fd_eps1_rel * body->support().c0;
    const auto path = sample_path(body, phi, {-eps, eps}, cfg.delta, opt);
    const auto f = path.torsion_values();
    const double fd = (f[1] - f[0]) / (2.0 * eps);
    const double denom = std::max({std::abs(formula), std::abs(fd), 1e-3 * mu_total});
    const double rel = std::abs(formula - fd) / denom;
    r.check = "first_variation";
    r.lhs = formula;
    r.rhs = fd;
    r.gap = fd - formula;
    r.tol = cfg.tolerance("variation.fd1") * denom;
    const bool zero_case = std::abs(formula) <= 1e-3 * mu_total &&
                           std::abs(fd) <= 1e-3 * mu_total;
    r.verdict = std::abs(r.gap) > r.tol ? Verdict::Violated
                : zero_case              ? Verdict::Equality
                                         : Verdict::Holds;
    r.diagnostics = {{"relative_error", rel}, {"eps", eps}, {"mu_total", mu_total},
                     {"T", bundle.T()}};
  } else {
    const auto bd = second_variation(bundle, phi);
    const double eps = cfg.fd_eps2_rel * body->support().c0;
    const auto path = sample_path(body, phi, {-eps, 0.0, eps}, cfg.delta, opt);
    const auto f = path.torsion_values();
    const double fd = (f[2] - 2.0 * f[1] + f[0]) / (eps * eps);
    const double denom = std::max({std::abs(bd.total), std::abs(fd), 1e-3 * bundle.T()});
    const double rel = std::abs(bd.total - fd) / denom;
    r.check = "second_variation";
    r.lhs = bd.total;
    r.rhs = fd;
    r.gap = fd - bd.total;
    r.tol = cfg.tolerance("variation.fd2") * denom;
    const bool zero_case = std::abs(bd.total) <= 1e-3 * bundle.T() &&
                           std::abs(fd) <= 1e-3 * bundle.T();
    r.verdict = std::abs(r.gap) > r.tol ? Verdict::Violated
                : zero_case              ? Verdict::Equality
                                         : Verdict::Holds;
    r.diagnostics = {{"relative_error", rel},
                     {"eps", eps},
                     {"term_curvature", bd.term_curv},
                     {"term_udot", bd.term_udot},
                     {"term_four", bd.term_four},
                     {"term_gradient", bd.term_grad},
                     {"total_power2", bd.total_power2},
                     {"fd_second_difference", fd},
                     {"T", bundle.T()}};
  }
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport verify_adjoint(const BodyPtr& body, const TestFunction& phi1,
                                  const TestFunction& phi2, const Config& cfg) {
  Stopwatch sw;
  auto bundle = compute_bundle(body, cfg.delta, cfg.torsion_options());
  const auto res = selfadjointness_check(bundle, phi1, phi2);
  VerificationReport r;
  r.check = "adjoint";
  r.inputs = {{"body", body_sig(*body)}, {"phi1", phi1.spec()},
              {"phi2", phi2.spec()}, {"delta", num(cfg.delta)}};
  r.lhs = res.a12;
  r.rhs = res.a21;
  r.gap = res.a21 - res.a12;
  r.tol = cfg.tolerance("adjoint.gap") *
          std::max({std::abs(res.a12), std::abs(res.a21), res.scale});
  const bool zero_case = std::abs(res.a12) <= 1e-3 * res.scale &&
                         std::abs(res.a21) <= 1e-3 * res.scale;
  r.verdict = res.gap > cfg.tolerance("adjoint.gap") ? Verdict::Violated
              : zero_case                             ? Verdict::Equality
                                                      : Verdict::Holds;
  r.diagnostics = {{"gap_rel", res.gap}, {"scale", res.scale}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport verify_hessian(const BodyPtr& body, int stations, const Config& cfg) {
  if (stations < 1) fail(ErrorCode::InvalidArgument, "need at least one station");
  Stopwatch sw;
  auto bundle = compute_bundle(body, cfg.delta, cfg.torsion_options());
  std::vector<double> thetas(stations);
  for (int k = 0; k < stations; ++k) thetas[k] = 2.0 * M_PI * k / stations;
  const auto res = hessian_boundary_identities(bundle, thetas);
  double worst = 0.0, worst_theta = 0.0;
  double worst_r1 = 0.0, worst_r2 = 0.0, worst_r3 = 0.0;
  for (int k = 0; k < stations; ++k) {
    const double v = res[k].max_scaled();
    if (v > worst) {
      worst = v;
      worst_theta = thetas[k];
      worst_r1 = res[k].r1;
      worst_r2 = res[k].r2;
      worst_r3 = res[k].r3;
    }
  }
  VerificationReport r;
  r.check = "hessian_identities";
  r.inputs = {{"body", body_sig(*body)}, {"stations", num(stations)},
              {"delta", num(cfg.delta)}};
  r.lhs = worst;
  r.rhs = 0.0;
  r.gap = -worst;
  r.tol = cfg.tolerance("hessian.pde");
  r.verdict = worst > r.tol ? Verdict::Violated : Verdict::Holds;
  r.diagnostics = {{"worst_theta", worst_theta}, {"r1", worst_r1},
                   {"r2", worst_r2}, {"r3", worst_r3}};
  r.timing_ms = sw.ms();
  return r;
}

VerificationReport equality_diagnostics(const BodyPtr& A, const BodyPtr& B,
                                        const Config& cfg) {
  Stopwatch sw;
  TrigPoly a = A->support(), b = B->support();
  // Centering: drop the translation (degree-1) part.
  if (a.degree() >= 1) a.cos_coeffs[0] = a.sin_coeffs[0] = 0.0;
  if (b.degree() >= 1) b.cos_coeffs[0] = b.sin_coeffs[0] = 0.0;
  const double beta = b.c0 / a.c0;
  const int K = std::max(a.degree(), b.degree());
  double resid = 0.0, scale = std::abs(b.c0);
  auto coeff = [](const std::vector<double>& v, int k) {
    return k <= static_cast<int>(v.size()) ? v[k - 1] : 0.0;
  };
  for (int k = 2; k <= K; ++k) {
    resid = std::max(resid, std::abs(coeff(b.cos_coeffs, k) - beta * coeff(a.cos_coeffs, k)));
    resid = std::max(resid, std::abs(coeff(b.sin_coeffs, k) - beta * coeff(a.sin_coeffs, k)));
    scale = std::max({scale, std::abs(coeff(b.cos_coeffs, k)), std::abs(coeff(b.sin_coeffs, k))});
  }
  const bool homothetic = resid <= cfg.tolerance("equality.homothety") * scale;
  VerificationReport r;
  r.check = "equality_diagnostics";
  r.inputs = {{"body_a", body_sig(*A)}, {"body_b", body_sig(*B)}};
  r.lhs = resid / scale;
  r.rhs = 0.0;
  r.gap = -r.lhs;
  r.tol = cfg.tolerance("equality.homothety");
  r.verdict = homothetic ? Verdict::Equality : Verdict::Holds;
  r.diagnostics = {{"beta", beta}, {"residual", resid},
                   {"homothetic", homothetic ? 1.0 : 0.0}};
  r.timing_ms = sw.ms();
  return r;
}

}  // namespace tlab
