#pragma once
#include <functional>
#include <vector>

namespace tlab {

/// Periodic scalar field sampled at the uniform angles theta_m = 2 pi m / N.
/// Integration uses the trapezoid rule, which is spectrally accurate for
/// smooth periodic integrands on this grid.
class BoundaryField {
public:
  BoundaryField() = default;
  explicit BoundaryField(int n, double fill = 0.0) : v_(n, fill) {}
  static BoundaryField sample(int n, const std::function<double(double)>& f);

  int size() const { return static_cast<int>(v_.size()); }
  double theta(int m) const;
  double operator[](int m) const { return v_[m]; }
  double& operator[](int m) { return v_[m]; }
  const std::vector<double>& values() const { return v_; }

  /// integral over [0, 2*pi) against d(theta).
  double integrate() const;
  /// integral of (this * w) d(theta).
  double integrate_weighted(const BoundaryField& w) const;

  double min() const;
  double max() const;

  /// d/d(theta) by trigonometric interpolation (exact for band-limited data).
  BoundaryField spectral_derivative() const;

  /// Periodic 4-point cubic Lagrange interpolation at an arbitrary angle.
  double interp_cubic(double theta) const;

  BoundaryField& operator*=(double s);
  BoundaryField& operator+=(const BoundaryField& r);
  BoundaryField& operator-=(const BoundaryField& r);

private:
  std::vector<double> v_;
};

BoundaryField operator*(const BoundaryField& a, const BoundaryField& b);
BoundaryField operator*(double s, const BoundaryField& a);
BoundaryField operator+(const BoundaryField& a, const BoundaryField& b);
BoundaryField operator-(const BoundaryField& a, const BoundaryField& b);

}  // namespace tlab
