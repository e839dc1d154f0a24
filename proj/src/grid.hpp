#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "body.hpp"

namespace tlab {

enum class NodeType : std::uint8_t { Exterior = 0, Interior = 1, Irregular = 2 };

/// One stencil arm of an interior node. For a cut arm the neighbor lies
/// outside and the Dirichlet value is taken at the boundary crossing,
/// located at distance alpha * delta from the node (alpha in (0, 1]).
struct Arm {
  double alpha = 1.0;
  double theta_cut = 0.0;  ///< Gauss-map angle of the crossing point
  bool cut = false;
};

struct NodeStencil {
  Arm arm[4];  // +x, -x, +y, -y
};

struct GridOptions {
  double aspect_limit = 20.0;  ///< needle rejection threshold (diameter / width)
  double min_delta_fraction = 1.0 / 32.0;  ///< require delta <= diameter * fraction
};

/// Cartesian node lattice covering the body with a 2*delta margin.
/// Nodes are classified exterior / interior-regular / interior-irregular;
/// irregular nodes carry the cut distances of their truncated stencil arms.
/// Each interior node also carries the area of its node-centered cell
/// clipped against the body (with rim cells of exterior nodes reassigned to
/// the nearest interior neighbor), so that sums of nodal values weighted by
/// cell_area approximate interior integrals to second order.
class CartesianGrid {
public:
  static CartesianGrid build(const ConvexBody2D& body, double delta,
                             const GridOptions& opt = {},
                             const std::optional<Bounds>& forced_bounds = {});

  double delta() const { return delta_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double x(int i) const { return x0_ + i * delta_; }
  double y(int j) const { return y0_ + j * delta_; }

  NodeType type(int i, int j) const {
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return NodeType::Exterior;
    return type_[static_cast<size_t>(j) * nx_ + i];
  }
  int interior_index(int i, int j) const {
    if (i < 0 || i >= nx_ || j < 0 || j >= ny_) return -1;
    return index_[static_cast<size_t>(j) * nx_ + i];
  }
  int interior_count() const { return static_cast<int>(nodes_.size()); }
  std::pair<int, int> interior_node(int idx) const { return nodes_[idx]; }
  const NodeStencil& stencil(int idx) const { return stencil_[idx]; }
  double cell_area(int idx) const { return cell_area_[idx]; }

  int irregular_count() const { return irregular_count_; }
  double covered_area() const;

private:
  CartesianGrid() = default;

  double delta_ = 0.0;
  double x0_ = 0.0, y0_ = 0.0;
  int nx_ = 0, ny_ = 0;
  std::vector<NodeType> type_;
  std::vector<std::int32_t> index_;
  std::vector<std::pair<int, int>> nodes_;
  std::vector<NodeStencil> stencil_;
  std::vector<double> cell_area_;
  int irregular_count_ = 0;
};

}  // namespace tlab
