#pragma once
#include <functional>
#include <vector>

namespace tlab {

/// Finite trigonometric polynomial on S^1,
///   p(theta) = c0 + sum_{k=1..K} (a_k cos k theta + b_k sin k theta),
/// differentiated analytically term by term. Stores support functions of
/// convex bodies as well as smooth test functions, so first and second
/// derivatives carry no discretization error.
struct TrigPoly {
  double c0 = 0.0;
  std::vector<double> cos_coeffs;  ///< a_k, k = index + 1
  std::vector<double> sin_coeffs;  ///< b_k, k = index + 1

  TrigPoly() = default;
  explicit TrigPoly(double mean) : c0(mean) {}
  TrigPoly(double mean, std::vector<double> a, std::vector<double> b);

  int degree() const { return static_cast<int>(cos_coeffs.size()); }

  double eval(double theta) const;
  double deriv(double theta) const;
  double deriv2(double theta) const;
  /// p'' + p, the curvature-radius form of a support function.
  double second_plus_self(double theta) const;

  /// s*p + t*q, coefficient-wise.
  static TrigPoly combine(const TrigPoly& p, double s, const TrigPoly& q, double t);
  TrigPoly scaled(double s) const;
  /// Adds (vx, vy) to the degree-1 coefficients (support of a translate).
  TrigPoly translated(double vx, double vy) const;

  bool all_finite() const;

  /// Least-squares/DFT projection of a smooth 2*pi-periodic function onto
  /// degree <= max_degree, sampled at `samples` uniform points.
  static TrigPoly project(const std::function<double(double)>& f,
                          int max_degree, int samples);
};

}  // namespace tlab
