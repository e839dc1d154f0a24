#include "solver.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace tlab {

DirichletSolver::DirichletSolver(const ConvexBody2D& body,
                                 std::shared_ptr<const CartesianGrid> grid,
                                 SolverOptions opt)
    : grid_(std::move(grid)), opt_(opt) {
  (void)body;
  const CartesianGrid& g = *grid_;
  const int n = g.interior_count();
  const double d = g.delta();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(n) * 5);
  for (int idx = 0; idx < n; ++idx) {
    const auto [i, j] = g.interior_node(idx);
    const NodeStencil& st = g.stencil(idx);
    const double hE = st.arm[0].alpha * d, hW = st.arm[1].alpha * d;
    const double hN = st.arm[2].alpha * d, hS = st.arm[3].alpha * d;
    const double cE = 2.0 / (hE * (hE + hW));
    const double cW = 2.0 / (hW * (hE + hW));
    const double cN = 2.0 / (hN * (hN + hS));
    const double cS = 2.0 / (hS * (hN + hS));
    trip.emplace_back(idx, idx, -(cE + cW + cN + cS));
    const int nbr[4] = {g.interior_index(i + 1, j), g.interior_index(i - 1, j),
                        g.interior_index(i, j + 1), g.interior_index(i, j - 1)};
    const double coef[4] = {cE, cW, cN, cS};
    for (int k = 0; k < 4; ++k)
      if (!st.arm[k].cut) trip.emplace_back(idx, nbr[k], coef[k]);
  }
  matrix_.resize(n, n);
  matrix_.setFromTriplets(trip.begin(), trip.end());
  matrix_.makeCompressed();
  lu_.compute(matrix_);
  if (lu_.info() != Eigen::Success)
    fail(ErrorCode::SolveFailed, "sparse LU factorization failed");
}

FieldSolution DirichletSolver::solve(double f, const BoundaryField& g) const {
  const CartesianGrid& gr = *grid_;
  const int n = gr.interior_count();
  const double d = gr.delta();
  Eigen::VectorXd b = Eigen::VectorXd::Constant(n, f);
  for (int idx = 0; idx < n; ++idx) {
    const NodeStencil& st = gr.stencil(idx);
    const double hE = st.arm[0].alpha * d, hW = st.arm[1].alpha * d;
    const double hN = st.arm[2].alpha * d, hS = st.arm[3].alpha * d;
    const double coef[4] = {2.0 / (hE * (hE + hW)), 2.0 / (hW * (hE + hW)),
                            2.0 / (hN * (hN + hS)), 2.0 / (hS * (hN + hS))};
    for (int k = 0; k < 4; ++k)
      if (st.arm[k].cut) b[idx] -= coef[k] * g.interp_cubic(st.arm[k].theta_cut);
  }

  FieldSolution sol;
  sol.grid = grid_;
  sol.rhs_f = f;
  sol.boundary_g = g;
  sol.values = lu_.solve(b);
  if (lu_.info() != Eigen::Success)
    fail(ErrorCode::SolveFailed, "sparse LU back-substitution failed");
  const double bnorm = b.norm();
  const double rnorm = (matrix_ * sol.values - b).norm();
  sol.residual_norm = rnorm / std::max(bnorm, 1e-300);
  if (bnorm > 0.0 && sol.residual_norm > opt_.residual_tol) {
    std::ostringstream os;
    os << "relative residual " << sol.residual_norm << " exceeds tolerance "
       << opt_.residual_tol;
    fail(ErrorCode::SolveFailed, os.str());
  }
  if (!sol.values.allFinite())
    fail(ErrorCode::SolveFailed, "non-finite solution values");
  return sol;
}

namespace {

void cubic_weights(double s, double w[4]) {
  // Lagrange cubic on nodes at local coordinates 0..3.
  w[0] = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  w[1] = s * (s - 2.0) * (s - 3.0) / 2.0;
  w[2] = -s * (s - 1.0) * (s - 3.0) / 2.0;
  w[3] = s * (s - 1.0) * (s - 2.0) / 6.0;
}

}  // namespace

double interpolate(const FieldSolution& sol, Vec2 p) {
  const CartesianGrid& g = *sol.grid;
  const double d = g.delta();
  const double tx = (p.x - g.x(0)) / d;
  const double ty = (p.y - g.y(0)) / d;
  const int i_lo = static_cast<int>(std::floor(tx));
  const int j_lo = static_cast<int>(std::floor(ty));

  // Candidate 4x4 blocks ordered centered-first; a block with start s covers
  // the point as long as s <= t <= s+3.
  const std::array<int, 3> shift = {-1, 0, -2};
  for (int a : shift) {
    const int si = i_lo + a;
    if (tx < si || tx > si + 3) continue;
    for (int b : shift) {
      const int sj = j_lo + b;
      if (ty < sj || ty > sj + 3) continue;
      bool ok = true;
      for (int jj = 0; jj < 4 && ok; ++jj)
        for (int ii = 0; ii < 4 && ok; ++ii)
          if (g.interior_index(si + ii, sj + jj) < 0) ok = false;
      if (!ok) continue;
      double wx[4], wy[4];
      cubic_weights(tx - si, wx);
      cubic_weights(ty - sj, wy);
      double v = 0.0;
      for (int jj = 0; jj < 4; ++jj) {
        double rowv = 0.0;
        for (int ii = 0; ii < 4; ++ii)
          rowv += wx[ii] * sol.values[g.interior_index(si + ii, sj + jj)];
        v += wy[jj] * rowv;
      }
      return v;
    }
  }
  std::ostringstream os;
  os << "no interior 4x4 interpolation block around (" << p.x << ", " << p.y << ")";
  fail(ErrorCode::PointOutsideStencil, os.str());
}

double boundary_normal_derivative(const FieldSolution& sol, const ConvexBody2D& body,
                                  double theta) {
  const double delta = sol.grid->delta();
  const double d = 2.0 * delta;
  const Vec2 nu(std::cos(theta), std::sin(theta));
  const Vec2 p = body.boundary_point_at(theta);
  double u1 = 0.0, u2 = 0.0;
  try {
    u1 = interpolate(sol, p - d * nu);
    u2 = interpolate(sol, p - 2.0 * d * nu);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PointOutsideStencil)
      fail(ErrorCode::GridTooCoarse,
           std::string("boundary stencil does not fit inside the body: ") + e.what());
    throw;
  }
  const double g0 = sol.boundary_g.interp_cubic(theta);
  return (3.0 * g0 - 4.0 * u1 + u2) / (2.0 * d);
}

BoundaryField boundary_normal_derivative_field(const FieldSolution& sol,
                                               const ConvexBody2D& body) {
  BoundaryField r(body.nodes());
  for (int m = 0; m < body.nodes(); ++m)
    r[m] = boundary_normal_derivative(sol, body, body.theta(m));
  return r;
}

namespace {

// 4th-order central difference weights at offsets -2h,-h,0,h,2h.
double d1_4th(const std::array<double, 5>& u, double h) {
  return (u[0] - 8.0 * u[1] + 8.0 * u[3] - u[4]) / (12.0 * h);
}

double d2_4th(const std::array<double, 5>& u, double h) {
  return (-u[0] + 16.0 * u[1] - 30.0 * u[2] + 16.0 * u[3] - u[4]) / (12.0 * h * h);
}

void require_margin(const FieldSolution& sol, const ConvexBody2D& body, Vec2 p) {
  const double d = sol.grid->delta();
  const double sd = body.signed_distance(p);
  if (sd > -3.0 * d * (1.0 - 1e-9)) {
    std::ostringstream os;
    os << "point (" << p.x << ", " << p.y << ") is " << -sd
       << " from the boundary; need >= " << 3.0 * d;
    fail(ErrorCode::TooCloseToBoundary, os.str());
  }
}

double interp_or_close(const FieldSolution& sol, Vec2 p) {
  try {
    return interpolate(sol, p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PointOutsideStencil)
      fail(ErrorCode::TooCloseToBoundary, e.what());
    throw;
  }
}

}  // namespace

Vec2 interior_gradient(const FieldSolution& sol, const ConvexBody2D& body, Vec2 p) {
  require_margin(sol, body, p);
  const double h = sol.grid->delta();
  std::array<double, 5> ux{}, uy{};
  for (int k = -2; k <= 2; ++k) {
    ux[k + 2] = interp_or_close(sol, {p.x + k * h, p.y});
    uy[k + 2] = interp_or_close(sol, {p.x, p.y + k * h});
  }
  return {d1_4th(ux, h), d1_4th(uy, h)};
}

SymMat2 interior_hessian(const FieldSolution& sol, const ConvexBody2D& body, Vec2 p) {
  require_margin(sol, body, p);
  const double h = sol.grid->delta();
  std::array<double, 5> ux{}, uy{};
  for (int k = -2; k <= 2; ++k) {
    ux[k + 2] = interp_or_close(sol, {p.x + k * h, p.y});
    uy[k + 2] = interp_or_close(sol, {p.x, p.y + k * h});
  }
  SymMat2 H;
  H.xx = d2_4th(ux, h);
  H.yy = d2_4th(uy, h);
  // Mixed derivative by the tensor product of the first-derivative stencil;
  // the formula is symmetric in x and y by construction.
  const std::array<int, 4> off = {-2, -1, 1, 2};
  const std::array<double, 4> c = {1.0, -8.0, 8.0, -1.0};
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      s += c[a] * c[b] * interp_or_close(sol, {p.x + off[a] * h, p.y + off[b] * h});
  H.xy = s / (144.0 * h * h);
  return H;
}

std::vector<Vec2> nodal_gradient(const FieldSolution& sol) {
  const CartesianGrid& g = *sol.grid;
  const double d = g.delta();
  const int n = g.interior_count();
  std::vector<Vec2> grad(n);

  auto axis_deriv = [&](int idx, int dir_plus, int dir_minus, int ip, int jp,
                        int im, int jm) {
    const NodeStencil& st = g.stencil(idx);
    const Arm& ap = st.arm[dir_plus];
    const Arm& am = st.arm[dir_minus];
    const double hp = ap.alpha * d, hm = am.alpha * d;
    const double u0 = sol.values[idx];
    const double up = ap.cut ? sol.boundary_g.interp_cubic(ap.theta_cut)
                             : sol.values[g.interior_index(ip, jp)];
    const double um = am.cut ? sol.boundary_g.interp_cubic(am.theta_cut)
                             : sol.values[g.interior_index(im, jm)];
    // Three-point first derivative on the non-uniform stencil (-hm, 0, +hp).
    return (-hp / (hm * (hm + hp))) * um + ((hp - hm) / (hm * hp)) * u0 +
           (hm / (hp * (hm + hp))) * up;
  };

  for (int idx = 0; idx < n; ++idx) {
    const auto [i, j] = g.interior_node(idx);
    grad[idx].x = axis_deriv(idx, 0, 1, i + 1, j, i - 1, j);
    grad[idx].y = axis_deriv(idx, 2, 3, i, j + 1, i, j - 1);
  }
  return grad;
}

double integrate_cells(const CartesianGrid& grid, const Eigen::VectorXd& nodal) {
  double s = 0.0;
  for (int idx = 0; idx < grid.interior_count(); ++idx)
    s += grid.cell_area(idx) * nodal[idx];
  return s;
}

}  // namespace tlab
