#include "boundary_field.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace tlab {

BoundaryField BoundaryField::sample(int n, const std::function<double(double)>& f) {
  BoundaryField r(n);
  for (int m = 0; m < n; ++m) r.v_[m] = f(2.0 * M_PI * m / n);
  return r;
}

double BoundaryField::theta(int m) const {
  return 2.0 * M_PI * m / static_cast<double>(size());
}

double BoundaryField::integrate() const {
  double s = 0.0;
  for (double x : v_) s += x;
  return s * 2.0 * M_PI / size();
}

double BoundaryField::integrate_weighted(const BoundaryField& w) const {
  if (w.size() != size()) fail(ErrorCode::InvalidArgument, "field size mismatch");
  double s = 0.0;
  for (int m = 0; m < size(); ++m) s += v_[m] * w.v_[m];
  return s * 2.0 * M_PI / size();
}

double BoundaryField::min() const { return *std::min_element(v_.begin(), v_.end()); }
double BoundaryField::max() const { return *std::max_element(v_.begin(), v_.end()); }

BoundaryField BoundaryField::spectral_derivative() const {
  const int n = size();
  if (n < 4) fail(ErrorCode::InvalidArgument, "field too short for derivative");
  // Direct real DFT; n stays small (a few hundred), so O(n^2) is fine and
  // keeps results bit-deterministic.
  const int kmax = n / 2;
  std::vector<double> a(kmax + 1, 0.0), b(kmax + 1, 0.0);
  for (int k = 1; k < kmax; ++k) {
    double ca = 0.0, sa = 0.0;
    for (int m = 0; m < n; ++m) {
      const double ang = 2.0 * M_PI * k * m / n;
      ca += v_[m] * std::cos(ang);
      sa += v_[m] * std::sin(ang);
    }
    a[k] = 2.0 * ca / n;
    b[k] = 2.0 * sa / n;
  }
  // The Nyquist mode carries no usable derivative information.
  BoundaryField r(n, 0.0);
  for (int m = 0; m < n; ++m) {
    const double th = 2.0 * M_PI * m / n;
    double d = 0.0;
    for (int k = 1; k < kmax; ++k)
      d += k * (-a[k] * std::sin(k * th) + b[k] * std::cos(k * th));
    r.v_[m] = d;
  }
  return r;
}

double BoundaryField::interp_cubic(double theta) const {
  const int n = size();
  const double step = 2.0 * M_PI / n;
  double t = theta / step;
  t -= std::floor(t / n) * n;  // wrap into [0, n)
  int m0 = static_cast<int>(std::floor(t));
  if (m0 >= n) m0 -= n;
  const double s = t - m0;  // in [0,1)
  // Lagrange cubic through nodes m0-1 .. m0+2 at local coordinates -1..2.
  const double w0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
  const double w1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
  const double w2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
  const double w3 = (s + 1.0) * s * (s - 1.0) / 6.0;
  auto at = [&](int m) { return v_[((m % n) + n) % n]; };
  return w0 * at(m0 - 1) + w1 * at(m0) + w2 * at(m0 + 1) + w3 * at(m0 + 2);
}

BoundaryField& BoundaryField::operator*=(double s) {
  for (double& x : v_) x *= s;
  return *this;
}

BoundaryField& BoundaryField::operator+=(const BoundaryField& r) {
  if (r.size() != size()) fail(ErrorCode::InvalidArgument, "field size mismatch");
  for (int m = 0; m < size(); ++m) v_[m] += r.v_[m];
  return *this;
}

BoundaryField& BoundaryField::operator-=(const BoundaryField& r) {
  if (r.size() != size()) fail(ErrorCode::InvalidArgument, "field size mismatch");
  for (int m = 0; m < size(); ++m) v_[m] -= r.v_[m];
  return *this;
}

BoundaryField operator*(const BoundaryField& a, const BoundaryField& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "field size mismatch");
  BoundaryField r(a.size());
  for (int m = 0; m < a.size(); ++m) r[m] = a[m] * b[m];
  return r;
}

BoundaryField operator*(double s, const BoundaryField& a) {
  BoundaryField r = a;
  r *= s;
  return r;
}

BoundaryField operator+(const BoundaryField& a, const BoundaryField& b) {
  BoundaryField r = a;
  r += b;
  return r;
}

BoundaryField operator-(const BoundaryField& a, const BoundaryField& b) {
  BoundaryField r = a;
  r -= b;
  return r;
}

}  // namespace tlab
