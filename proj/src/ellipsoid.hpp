#pragma once
#include <array>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace tlab {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
  constexpr Vec3() = default;
  constexpr Vec3(double X, double Y, double Z) : x(X), y(Y), z(Z) {}
  constexpr Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
  constexpr Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
  constexpr double dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }
  constexpr Vec3 cross(const Vec3& r) const {
    return {y * r.z - z * r.y, z * r.x - x * r.z, x * r.y - y * r.x};
  }
  double norm() const;
  Vec3 normalized() const;
};

/// Ellipsoid with the exact torsion function U = C (1 - sum x_i^2 / a_i^2),
/// C = 1 / sum(1/a_i^2); Laplace(U) = -2 identically and U vanishes on the
/// boundary, so every torsion quantity has a closed form. n = 2 treats the
/// third axis as absent.
struct Ellipsoid {
  int n = 2;
  std::array<double, 3> a{1.0, 1.0, 1.0};

  static Ellipsoid make(const std::vector<double>& axes);

  double C() const;
  /// n=2: pi a^3 b^3 / (a^2 + b^2); n=3: (16 pi / 15) a b c C.
  double torsion() const;
  double volume() const;

  double h(const Vec3& xi) const;      ///< sqrt(sum a_i^2 xi_i^2)
  Vec3 F(const Vec3& xi) const;        ///< (a_i^2 xi_i) / h
  double gradmag(const Vec3& xi) const { return 2.0 * C() / h(xi); }
  Vec3 hessU_diag() const;             ///< grad^2 U = diag(-2C/a_i^2)
};

/// Product quadrature on S^2: Gauss-Legendre in the polar cosine times a
/// uniform azimuthal grid. Validated against zonal harmonics up to the
/// configured degree before use.
struct S2Quadrature {
  std::vector<Vec3> nodes;
  std::vector<double> weights;
  int polar = 0, azimuthal = 0;

  static S2Quadrature build(int polar, int azimuthal, int check_degree);
  double total_weight() const;
};

/// Reverse Weingarten data at a unit direction. The local orthonormal frame
/// (e1, e2) spans the tangent plane; in 2D only e1 and W11 are meaningful.
struct SurfaceData {
  Vec3 F;
  double h = 0.0;
  double gradmag = 0.0;
  Vec3 e1, e2;
  double W11 = 0.0, W12 = 0.0, W22 = 0.0;
  double detW = 0.0;
  double trW = 0.0;
};

/// frame_rotation rotates the tangent frame (n = 3 only); frame-invariant
/// outputs must not depend on it.
SurfaceData boundary_quantities(const Ellipsoid& e, Vec3 xi,
                                double fd_step = 1e-2, double frame_rotation = 0.0);

/// Worst scaled residual of the three boundary Hessian identities assembled
/// from closed-form fields at xi.
double hessian_identity_residual(const Ellipsoid& e, const Vec3& xi,
                                 double frame_rotation = 0.0);

/// 2 * integral of U by product quadrature (radial Gauss-Legendre times a
/// sphere/circle rule), an oracle for the closed-form torsion.
double torsion_by_quadrature(const Ellipsoid& e, int radial, int angular);

double surface_measure_quadrature(const Ellipsoid& e, const S2Quadrature& quad);
double surface_area_parametric(const Ellipsoid& e, int resolution);

VerificationReport oracle_torsion_report(const Ellipsoid& e, const Config& cfg);
VerificationReport oracle_theorem3d_report(const Ellipsoid& e, Vec3 xi0,
                                           const Config& cfg);
VerificationReport oracle_homothety_report(const Ellipsoid& e, double factor,
                                           int samples, const Config& cfg);
VerificationReport oracle_hessian_report(const Ellipsoid& e, const Config& cfg);

}  // namespace tlab
