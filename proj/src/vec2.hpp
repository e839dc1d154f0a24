#pragma once
#include <cmath>

namespace tlab {

/// Plain 2D vector, double precision.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double X, double Y) : x(X), y(Y) {}

  constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
  constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }
  Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
  Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }

  constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
  double norm() const { return std::sqrt(x * x + y * y); }
};

/// Symmetric 2x2 matrix (xx, xy, yy).
struct SymMat2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr Vec2 apply(const Vec2& v) const {
    return {xx * v.x + xy * v.y, xy * v.x + yy * v.y};
  }
  constexpr double quad(const Vec2& v) const { return apply(v).dot(v); }
  constexpr double trace() const { return xx + yy; }
};

}  // namespace tlab
