#include "body.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace tlab {

ConvexBody2D ConvexBody2D::validate(TrigPoly support, int nodes,
                                    const BodyLimits& limits) {
  if (nodes < 64 || nodes % 2 != 0)
    fail(ErrorCode::InvalidArgument, "node count must be even and >= 64");
  if (!support.all_finite())
    fail(ErrorCode::InvalidArgument, "non-finite support coefficients");
  if (support.degree() > limits.max_degree)
    fail(ErrorCode::InvalidArgument, "support degree exceeds configured maximum");

  // c0 is the mean of h; after removing the translation part it must be
  // positive for the support function of a body with interior.
  if (support.c0 <= 0.0)
    fail(ErrorCode::DegenerateSupport, "mean support c0 <= 0 after centering");

  ConvexBody2D body;
  body.support_ = std::move(support);
  body.n_ = nodes;
  body.h_ = BoundaryField(nodes);
  body.hp_ = BoundaryField(nodes);
  body.hpp_ = BoundaryField(nodes);
  body.w_ = BoundaryField(nodes);
  body.F_.resize(nodes);
  body.scan_points_ = std::max(64, 4 * (body.support_.degree() + 2));

  const double eps_w = limits.eps_w_rel * body.support_.c0;
  double wmin = 1e300;
  int worst = 0;
  for (int m = 0; m < nodes; ++m) {
    const double th = body.theta(m);
    const double h = body.support_.eval(th);
    const double hp = body.support_.deriv(th);
    const double hpp = body.support_.deriv2(th);
    const double w = hpp + h;
    body.h_[m] = h;
    body.hp_[m] = hp;
    body.hpp_[m] = hpp;
    body.w_[m] = w;
    const double c = std::cos(th), s = std::sin(th);
    body.F_[m] = Vec2(h * c - hp * s, h * s + hp * c);
    if (w < wmin) {
      wmin = w;
      worst = m;
    }
  }
  if (wmin <= eps_w) {
    std::ostringstream os;
    os << "curvature radius w(theta) = " << wmin << " at theta = "
       << body.theta(worst) << " (threshold " << eps_w << ")";
    fail(ErrorCode::NotConvex, os.str());
  }
  return body;
}

Vec2 ConvexBody2D::boundary_point_at(double theta) const {
  const double h = support_.eval(theta);
  const double hp = support_.deriv(theta);
  const double c = std::cos(theta), s = std::sin(theta);
  return {h * c - hp * s, h * s + hp * c};
}

Vec2 ConvexBody2D::normal(int m) const {
  const double th = theta(m);
  return {std::cos(th), std::sin(th)};
}

double ConvexBody2D::area() const {
  // (1/2) integral of h * w d(theta); exact for trig polynomials on this grid.
  return 0.5 * h_.integrate_weighted(w_);
}

double ConvexBody2D::diameter() const {
  double d2 = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const Vec2 d = F_[i] - F_[j];
      d2 = std::max(d2, d.dot(d));
    }
  return std::sqrt(d2);
}

double ConvexBody2D::min_width() const {
  double wmin = 1e300;
  const int half = n_ / 2;
  for (int m = 0; m < half; ++m)
    wmin = std::min(wmin, h_[m] + h_[m + half]);
  return wmin;
}

Bounds ConvexBody2D::bounds() const {
  // The support function gives exact axis-aligned bounds.
  return {-support_.eval(M_PI), support_.eval(0.0),
          -support_.eval(1.5 * M_PI), support_.eval(0.5 * M_PI)};
}

ConvexBody2D ConvexBody2D::translated(Vec2 v, const BodyLimits& limits) const {
  return validate(support_.translated(v.x, v.y), n_, limits);
}

ConvexBody2D ConvexBody2D::scaled(double a, const BodyLimits& limits) const {
  if (!(a > 0.0)) fail(ErrorCode::InvalidArgument, "scale factor must be positive");
  return validate(support_.scaled(a), n_, limits);
}

ConvexBody2D ConvexBody2D::minkowski(const ConvexBody2D& A, const ConvexBody2D& B,
                                     double s, double t, const BodyLimits& limits) {
  if (s < 0.0 || t < 0.0 || s + t <= 0.0)
    fail(ErrorCode::InvalidArgument, "minkowski weights must be >= 0 with s+t > 0");
  const int nodes = std::max(A.n_, B.n_);
  return validate(TrigPoly::combine(A.support_, s, B.support_, t), nodes, limits);
}

ConvexBody2D ConvexBody2D::random(std::uint64_t seed, int degree, double amplitude,
                                  int nodes, const BodyLimits& limits) {
  if (degree < 2) fail(ErrorCode::InvalidArgument, "random body degree must be >= 2");
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    fail(ErrorCode::InvalidArgument, "amplitude must lie in [0, 1)");
  std::mt19937_64 rng(seed);
  const int retries = 64;
  for (int attempt = 0; attempt < retries; ++attempt) {
    TrigPoly p(1.0);
    p.cos_coeffs.assign(degree, 0.0);
    p.sin_coeffs.assign(degree, 0.0);
    for (int k = 2; k <= degree; ++k) {
      const double bound = amplitude / (degree * static_cast<double>(k) * k);
      p.cos_coeffs[k - 1] = uniform(rng, -bound, bound);
      p.sin_coeffs[k - 1] = uniform(rng, -bound, bound);
    }
    double wmin = 1e300;
    for (int m = 0; m < 4 * nodes; ++m)
      wmin = std::min(wmin, p.second_plus_self(2.0 * M_PI * m / (4 * nodes)));
    if (wmin >= 0.05) return validate(std::move(p), nodes, limits);
  }
  fail(ErrorCode::GenerationFailed, "random body rejection loop exhausted retries");
}

double ConvexBody2D::signed_distance(Vec2 X, double* theta_star) const {
  // g(theta) = X . xi(theta) - h(theta) attains its maximum at the normal
  // direction of the nearest boundary point. Coarse scan, then Newton.
  const int M = scan_points_;
  double best = -1e300, best_th = 0.0;
  for (int m = 0; m < M; ++m) {
    const double th = 2.0 * M_PI * m / M;
    const double g = X.x * std::cos(th) + X.y * std::sin(th) - support_.eval(th);
    if (g > best) {
      best = g;
      best_th = th;
    }
  }
  double th = best_th;
  for (int it = 0; it < 40; ++it) {
    const double c = std::cos(th), s = std::sin(th);
    const double g1 = -X.x * s + X.y * c - support_.deriv(th);
    const double g2 = -X.x * c - X.y * s - support_.deriv2(th);
    if (g2 >= -1e-300) break;  // not locally concave; keep scan result
    const double step = g1 / g2;
    th -= step;
    if (std::abs(step) < 1e-14) break;
  }
  const double refined = X.x * std::cos(th) + X.y * std::sin(th) - support_.eval(th);
  if (refined > best) {
    best = refined;
    best_th = th;
  }
  if (theta_star) *theta_star = best_th;
  return best;
}

ConvexBody2D make_disk(double radius, int nodes, const BodyLimits& limits) {
  if (!(radius > 0.0)) fail(ErrorCode::InvalidArgument, "disk radius must be positive");
  return ConvexBody2D::validate(TrigPoly(radius), nodes, limits);
}

ConvexBody2D make_ellipse(double a, double b, int nodes, int project_degree,
                          const BodyLimits& limits) {
  if (!(a > 0.0) || !(b > 0.0))
    fail(ErrorCode::InvalidArgument, "ellipse semi-axes must be positive");
  auto h = [a, b](double th) {
    const double c = a * std::cos(th), s = b * std::sin(th);
    return std::sqrt(c * c + s * s);
  };
  TrigPoly p = TrigPoly::project(h, project_degree, 4 * nodes);
  return ConvexBody2D::validate(std::move(p), nodes, limits);
}

}  // namespace tlab
