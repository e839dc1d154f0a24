#include "trig_poly.hpp"

#include <cmath>

#include "error.hpp"

namespace tlab {

TrigPoly::TrigPoly(double mean, std::vector<double> a, std::vector<double> b)
    : c0(mean), cos_coeffs(std::move(a)), sin_coeffs(std::move(b)) {
  if (cos_coeffs.size() != sin_coeffs.size())
    sin_coeffs.resize(cos_coeffs.size(), 0.0);
}

double TrigPoly::eval(double theta) const {
  double v = c0;
  for (int k = 1; k <= degree(); ++k)
    v += cos_coeffs[k - 1] * std::cos(k * theta) + sin_coeffs[k - 1] * std::sin(k * theta);
  return v;
}

double TrigPoly::deriv(double theta) const {
  double v = 0.0;
  for (int k = 1; k <= degree(); ++k)
    v += k * (-cos_coeffs[k - 1] * std::sin(k * theta) + sin_coeffs[k - 1] * std::cos(k * theta));
  return v;
}

double TrigPoly::deriv2(double theta) const {
  double v = 0.0;
  for (int k = 1; k <= degree(); ++k)
    v -= static_cast<double>(k) * k *
         (cos_coeffs[k - 1] * std::cos(k * theta) + sin_coeffs[k - 1] * std::sin(k * theta));
  return v;
}

double TrigPoly::second_plus_self(double theta) const {
  // k=1 terms drop out of p'' + p.
  double v = c0;
  for (int k = 2; k <= degree(); ++k)
    v += (1.0 - static_cast<double>(k) * k) *
         (cos_coeffs[k - 1] * std::cos(k * theta) + sin_coeffs[k - 1] * std::sin(k * theta));
  return v;
}

TrigPoly TrigPoly::combine(const TrigPoly& p, double s, const TrigPoly& q, double t) {
  TrigPoly r;
  const int K = std::max(p.degree(), q.degree());
  r.c0 = s * p.c0 + t * q.c0;
  r.cos_coeffs.assign(K, 0.0);
  r.sin_coeffs.assign(K, 0.0);
  for (int k = 1; k <= p.degree(); ++k) {
    r.cos_coeffs[k - 1] += s * p.cos_coeffs[k - 1];
    r.sin_coeffs[k - 1] += s * p.sin_coeffs[k - 1];
  }
  for (int k = 1; k <= q.degree(); ++k) {
    r.cos_coeffs[k - 1] += t * q.cos_coeffs[k - 1];
    r.sin_coeffs[k - 1] += t * q.sin_coeffs[k - 1];
  }
  return r;
}

TrigPoly TrigPoly::scaled(double s) const {
  TrigPoly r = *this;
  r.c0 *= s;
  for (auto& v : r.cos_coeffs) v *= s;
  for (auto& v : r.sin_coeffs) v *= s;
  return r;
}

TrigPoly TrigPoly::translated(double vx, double vy) const {
  TrigPoly r = *this;
  if (r.degree() < 1) {
    r.cos_coeffs.resize(1, 0.0);
    r.sin_coeffs.resize(1, 0.0);
  }
  r.cos_coeffs[0] += vx;
  r.sin_coeffs[0] += vy;
  return r;
}

bool TrigPoly::all_finite() const {
  if (!std::isfinite(c0)) return false;
  for (double v : cos_coeffs)
    if (!std::isfinite(v)) return false;
  for (double v : sin_coeffs)
    if (!std::isfinite(v)) return false;
  return true;
}

TrigPoly TrigPoly::project(const std::function<double(double)>& f,
                           int max_degree, int samples) {
  if (max_degree < 0 || samples < 2 * (max_degree + 1))
    fail(ErrorCode::InvalidArgument, "projection needs samples >= 2*(degree+1)");
  const double two_pi = 2.0 * M_PI;
  std::vector<double> vals(samples);
  for (int m = 0; m < samples; ++m) vals[m] = f(two_pi * m / samples);

  TrigPoly r;
  r.cos_coeffs.assign(max_degree, 0.0);
  r.sin_coeffs.assign(max_degree, 0.0);
  double mean = 0.0;
  for (double v : vals) mean += v;
  r.c0 = mean / samples;
  for (int k = 1; k <= max_degree; ++k) {
    double ca = 0.0, sa = 0.0;
    for (int m = 0; m < samples; ++m) {
      const double ang = two_pi * k * m / samples;
      ca += vals[m] * std::cos(ang);
      sa += vals[m] * std::sin(ang);
    }
    r.cos_coeffs[k - 1] = 2.0 * ca / samples;
    r.sin_coeffs[k - 1] = 2.0 * sa / samples;
  }
  return r;
}

}  // namespace tlab
