#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "boundary_field.hpp"
#include "trig_poly.hpp"
#include "vec2.hpp"

namespace tlab {

struct BodyLimits {
  double eps_w_rel = 1e-8;  ///< convexity threshold, relative to c0
  int max_degree = 64;
};

struct Bounds {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  Bounds merged(const Bounds& o) const {
    return {std::min(xmin, o.xmin), std::max(xmax, o.xmax),
            std::min(ymin, o.ymin), std::max(ymax, o.ymax)};
  }
};

/// Smooth planar convex body described by a trigonometric support function.
/// Construction validates membership in the cone of C^2_+ bodies
/// (curvature radius w = h'' + h strictly positive on the node grid) and
/// caches samples of h, h', h'', w and the boundary points
///   F(theta) = h (cos, sin) + h' (-sin, cos)
/// at theta_m = 2 pi m / N. The outward unit normal at F(theta_m) is
/// (cos theta_m, sin theta_m).
class ConvexBody2D {
public:
  /// Validates and builds the cached representation.
  /// Throws NotConvex / DegenerateSupport / InvalidArgument.
  static ConvexBody2D validate(TrigPoly support, int nodes,
                               const BodyLimits& limits = {});

  const TrigPoly& support() const { return support_; }
  int nodes() const { return n_; }
  double theta(int m) const { return 2.0 * M_PI * m / n_; }

  const BoundaryField& h() const { return h_; }
  const BoundaryField& hp() const { return hp_; }
  const BoundaryField& hpp() const { return hpp_; }
  const BoundaryField& w() const { return w_; }
  Vec2 boundary_point(int m) const { return F_[m]; }
  Vec2 boundary_point_at(double theta) const;
  Vec2 normal(int m) const;

  double area() const;
  double diameter() const;
  /// Minimal width over directions, max{...} / min gives the aspect ratio.
  double min_width() const;
  Bounds bounds() const;

  ConvexBody2D translated(Vec2 v, const BodyLimits& limits = {}) const;
  ConvexBody2D scaled(double a, const BodyLimits& limits = {}) const;
  static ConvexBody2D minkowski(const ConvexBody2D& A, const ConvexBody2D& B,
                                double s, double t, const BodyLimits& limits = {});

  /// h = 1 + sum_{k=2..K} coefficients drawn uniformly in
  /// [-amp/(K k^2), amp/(K k^2)], redrawn until min w >= 0.05.
  static ConvexBody2D random(std::uint64_t seed, int degree, double amplitude,
                             int nodes, const BodyLimits& limits = {});

  /// Signed support distance: max over directions of X.xi - h(xi).
  /// Negative inside (equals -dist(X, boundary)), positive outside.
  /// Optionally reports the maximizing angle (the contact normal).
  double signed_distance(Vec2 X, double* theta_star = nullptr) const;
  bool contains(Vec2 X) const { return signed_distance(X) < 0.0; }

private:
  ConvexBody2D() = default;

  TrigPoly support_;
  int n_ = 0;
  BoundaryField h_, hp_, hpp_, w_;
  std::vector<Vec2> F_;
  int scan_points_ = 64;
};

ConvexBody2D make_disk(double radius, int nodes, const BodyLimits& limits = {});
/// Ellipse with semi-axes (a, b), ingested by projecting the exact support
/// function sqrt(a^2 cos^2 + b^2 sin^2) onto trig coefficients.
ConvexBody2D make_ellipse(double a, double b, int nodes, int project_degree = 16,
                          const BodyLimits& limits = {});

}  // namespace tlab
