#include "grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"

namespace tlab {

namespace {

struct LineInterval {
  bool hit = false;
  double lo = 0.0, hi = 0.0;
};

// Signed support distance restricted to an axis-aligned line; convex in the
// line parameter. The derivative along +x is cos(theta*), along +y
// sin(theta*) with theta* the maximizing angle, so the interior minimum can
// be bracketed by the gradient sign.
class LineProbe {
public:
  LineProbe(const ConvexBody2D& body, bool horizontal, double level)
      : body_(body), horizontal_(horizontal), level_(level) {}

  double dist(double s, double* grad = nullptr, double* theta = nullptr) const {
    const Vec2 p = horizontal_ ? Vec2(s, level_) : Vec2(level_, s);
    double th = 0.0;
    const double d = body_.signed_distance(p, &th);
    if (grad) *grad = horizontal_ ? std::cos(th) : std::sin(th);
    if (theta) *theta = th;
    return d;
  }

  LineInterval interval(double a, double b) const {
    double ga = 0.0, gb = 0.0;
    dist(a, &ga);
    dist(b, &gb);
    // Both endpoints lie outside (the lattice carries a 2*delta margin), so
    // if the minimum sits at an endpoint the line misses the body.
    if (ga >= 0.0 || gb <= 0.0) return {};
    double lo = a, hi = b;
    for (int it = 0; it < 80 && hi - lo > 1e-15 * (b - a); ++it) {
      const double mid = 0.5 * (lo + hi);
      double g = 0.0;
      dist(mid, &g);
      (g < 0.0 ? lo : hi) = mid;
    }
    const double s_min = 0.5 * (lo + hi);
    if (dist(s_min) >= 0.0) return {};
    LineInterval r;
    r.hit = true;
    r.lo = bisect(a, s_min);
    r.hi = bisect(b, s_min);
    return r;
  }

  /// Root of dist between an outside and an inside parameter.
  double bisect(double outside, double inside) const {
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (outside + inside);
      if (mid == outside || mid == inside) break;
      (dist(mid) < 0.0 ? inside : outside) = mid;
    }
    return 0.5 * (outside + inside);
  }

private:
  const ConvexBody2D& body_;
  bool horizontal_;
  double level_;
};

}  // namespace

CartesianGrid CartesianGrid::build(const ConvexBody2D& body, double delta,
                                   const GridOptions& opt,
                                   const std::optional<Bounds>& forced_bounds) {
  if (!(delta > 0.0)) fail(ErrorCode::InvalidArgument, "grid spacing must be positive");
  const double diam = body.diameter();
  if (delta > diam * opt.min_delta_fraction) {
    std::ostringstream os;
    os << "delta = " << delta << " exceeds diameter/" << 1.0 / opt.min_delta_fraction
       << " = " << diam * opt.min_delta_fraction;
    fail(ErrorCode::GridTooCoarse, os.str());
  }
  const double width = body.min_width();
  if (diam / width > opt.aspect_limit) {
    std::ostringstream os;
    os << "needle-like body rejected: aspect ratio " << diam / width << " > "
       << opt.aspect_limit;
    fail(ErrorCode::GridTooCoarse, os.str());
  }

  CartesianGrid g;
  g.delta_ = delta;
  const Bounds bb = forced_bounds ? forced_bounds->merged(body.bounds()) : body.bounds();
  g.x0_ = bb.xmin - 2.0 * delta;
  g.y0_ = bb.ymin - 2.0 * delta;
  g.nx_ = static_cast<int>(std::ceil((bb.xmax + 2.0 * delta - g.x0_) / delta)) + 1;
  g.ny_ = static_cast<int>(std::ceil((bb.ymax + 2.0 * delta - g.y0_) / delta)) + 1;

  // The body slices each grid row and column in a single interval; node
  // classification and arm cuts both come from these intervals so they are
  // consistent by construction.
  std::vector<LineInterval> row(g.ny_), col(g.nx_);
  const double xa = g.x(0), xb = g.x(g.nx_ - 1);
  const double ya = g.y(0), yb = g.y(g.ny_ - 1);
  for (int j = 0; j < g.ny_; ++j)
    row[j] = LineProbe(body, true, g.y(j)).interval(xa, xb);
  for (int i = 0; i < g.nx_; ++i)
    col[i] = LineProbe(body, false, g.x(i)).interval(ya, yb);

  const size_t total = static_cast<size_t>(g.nx_) * g.ny_;
  g.type_.assign(total, NodeType::Exterior);
  g.index_.assign(total, -1);

  auto is_interior = [&](int i, int j) {
    if (i < 0 || i >= g.nx_ || j < 0 || j >= g.ny_) return false;
    const auto& r = row[j];
    const auto& c = col[i];
    return r.hit && c.hit && r.lo < g.x(i) && g.x(i) < r.hi && c.lo < g.y(j) &&
           g.y(j) < c.hi;
  };

  for (int j = 0; j < g.ny_; ++j)
    for (int i = 0; i < g.nx_; ++i)
      if (is_interior(i, j)) {
        g.type_[static_cast<size_t>(j) * g.nx_ + i] = NodeType::Interior;
        g.index_[static_cast<size_t>(j) * g.nx_ + i] =
            static_cast<std::int32_t>(g.nodes_.size());
        g.nodes_.emplace_back(i, j);
      }

  g.stencil_.resize(g.nodes_.size());
  for (size_t idx = 0; idx < g.nodes_.size(); ++idx) {
    const auto [i, j] = g.nodes_[idx];
    NodeStencil& st = g.stencil_[idx];
    const int ni[4] = {i + 1, i - 1, i, i};
    const int nj[4] = {j, j, j + 1, j - 1};
    bool irregular = false;
    for (int d = 0; d < 4; ++d) {
      if (is_interior(ni[d], nj[d])) continue;
      irregular = true;
      Arm& arm = st.arm[d];
      arm.cut = true;
      double cut_coord = 0.0;
      if (d < 2) {
        cut_coord = (d == 0) ? row[j].hi : row[j].lo;
        arm.alpha = std::abs(cut_coord - g.x(i)) / delta;
      } else {
        cut_coord = (d == 2) ? col[i].hi : col[i].lo;
        arm.alpha = std::abs(cut_coord - g.y(j)) / delta;
      }
      arm.alpha = std::clamp(arm.alpha, 1e-12, 1.0);
      const Vec2 cut_pt = (d < 2) ? Vec2(cut_coord, g.y(j)) : Vec2(g.x(i), cut_coord);
      body.signed_distance(cut_pt, &arm.theta_cut);
    }
    if (irregular) {
      g.type_[static_cast<size_t>(j) * g.nx_ + i] = NodeType::Irregular;
      ++g.irregular_count_;
    }
  }

  if (g.nodes_.size() < 16)
    fail(ErrorCode::GridTooCoarse, "fewer than 16 interior nodes");

  // Every stretch of the boundary must be seen by some irregular node.
  {
    std::vector<Vec2> irr;
    irr.reserve(g.irregular_count_);
    for (size_t idx = 0; idx < g.nodes_.size(); ++idx) {
      const auto [i, j] = g.nodes_[idx];
      if (g.type(i, j) == NodeType::Irregular) irr.emplace_back(g.x(i), g.y(j));
    }
    const double reach2 = 8.0 * delta * delta;  // (2*sqrt(2)*delta)^2
    for (int m = 0; m < body.nodes(); ++m) {
      const Vec2 F = body.boundary_point(m);
      bool covered = false;
      for (const Vec2& p : irr) {
        const Vec2 d = F - p;
        if (d.dot(d) <= reach2) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        std::ostringstream os;
        os << "boundary arc near theta = " << body.theta(m)
           << " subtends no irregular node";
        fail(ErrorCode::GridTooCoarse, os.str());
      }
    }
  }

  // Clipped node-centered cell areas. Corners are shared by four cells;
  // cache their classification.
  std::vector<std::int8_t> corner_cache(
      static_cast<size_t>(g.nx_ + 1) * (g.ny_ + 1), -1);
  auto corner_inside = [&](int ci, int cj) {
    const size_t key = static_cast<size_t>(cj) * (g.nx_ + 1) + ci;
    if (corner_cache[key] < 0) {
      const Vec2 p(g.x0_ + (ci - 0.5) * delta, g.y0_ + (cj - 0.5) * delta);
      corner_cache[key] = body.signed_distance(p) < 0.0 ? 1 : 0;
    }
    return corner_cache[key] == 1;
  };

  auto clipped_cell_area = [&](int i, int j) -> double {
    // Corners CCW starting lower-left; corner (i, j) of the corner lattice
    // sits at node (i, j) minus half a cell.
    const int ci[4] = {i, i + 1, i + 1, i};
    const int cj[4] = {j, j, j + 1, j + 1};
    Vec2 pt[4];
    bool in[4];
    int inside_count = 0;
    for (int k = 0; k < 4; ++k) {
      pt[k] = Vec2(g.x0_ + (ci[k] - 0.5) * delta, g.y0_ + (cj[k] - 0.5) * delta);
      in[k] = corner_inside(ci[k], cj[k]);
      inside_count += in[k] ? 1 : 0;
    }
    if (inside_count == 4) return delta * delta;
    std::vector<Vec2> poly;
    poly.reserve(8);
    for (int k = 0; k < 4; ++k) {
      const int k2 = (k + 1) % 4;
      if (in[k]) poly.push_back(pt[k]);
      if (in[k] != in[k2]) {
        // crossing on this edge
        Vec2 a = pt[k], b = pt[k2];
        if (!in[k]) std::swap(a, b);  // a inside, b outside
        for (int it = 0; it < 48; ++it) {
          const Vec2 mid = 0.5 * (a + b);
          (body.signed_distance(mid) < 0.0 ? a : b) = mid;
        }
        poly.push_back(0.5 * (a + b));
      }
    }
    if (poly.size() < 3) return 0.0;
    double s = 0.0;
    for (size_t k = 0; k < poly.size(); ++k) {
      const Vec2& a = poly[k];
      const Vec2& b = poly[(k + 1) % poly.size()];
      s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(s);
  };

  g.cell_area_.assign(g.nodes_.size(), 0.0);
  const int dx8[8] = {1, -1, 0, 0, 1, -1, 1, -1};
  const int dy8[8] = {0, 0, 1, -1, 1, 1, -1, -1};
  for (int j = 0; j < g.ny_; ++j) {
    for (int i = 0; i < g.nx_; ++i) {
      const int own = g.interior_index(i, j);
      bool near_interior = own >= 0;
      bool all_neighbors_interior = own >= 0;
      for (int k = 0; k < 8 && (!near_interior || all_neighbors_interior); ++k) {
        const bool nin = g.interior_index(i + dx8[k], j + dy8[k]) >= 0;
        near_interior = near_interior || nin;
        all_neighbors_interior = all_neighbors_interior && nin;
      }
      if (!near_interior) continue;
      if (own >= 0 && all_neighbors_interior) {
        g.cell_area_[own] += delta * delta;
        continue;
      }
      const double area = clipped_cell_area(i, j);
      if (area <= 0.0) continue;
      int donor = own;
      if (donor < 0) {
        for (int k = 0; k < 8 && donor < 0; ++k)
          donor = g.interior_index(i + dx8[k], j + dy8[k]);
      }
      if (donor >= 0) g.cell_area_[donor] += area;
    }
  }

  return g;
}

double CartesianGrid::covered_area() const {
  double s = 0.0;
  for (double a : cell_area_) s += a;
  return s;
}

}  // namespace tlab
