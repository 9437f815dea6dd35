#pragma once

#include "urbanrom/mesh.hpp"
#include "urbanrom/types.hpp"

#include <array>
#include <memory>
#include <optional>
#include <vector>

namespace urbanrom {

// Affine triangle data: area and gradients of the barycentric coordinates.
struct ElementGeometry {
  double area = 0.0;
  double diameter = 0.0;
  std::array<Eigen::Vector2d, 3> grad_bary;
};

ElementGeometry element_geometry(const Point& p0, const Point& p1, const Point& p2);

// P2 velocity / P1 pressure degree-of-freedom maps.
//
// P2 nodes are the mesh vertices (ids 0..V-1) followed by one midpoint per
// geometric edge (ids V..V+E-1). Cell-local node order: the three vertices,
// then midpoints of edges (0,1), (1,2), (2,0). Velocity dofs are blocked:
// x-components at [0, n), y-components at [n, 2n).
class TaylorHoodSpace {
 public:
  explicit TaylorHoodSpace(std::shared_ptr<const Mesh> mesh);

  const Mesh& mesh() const { return *mesh_; }
  const std::shared_ptr<const Mesh>& mesh_ptr() const { return mesh_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_cells() const { return mesh_->num_triangles(); }
  int velocity_dofs() const { return 2 * num_nodes(); }
  int pressure_dofs() const { return mesh_->num_vertices(); }

  int ux(int node) const { return node; }
  int uy(int node) const { return num_nodes() + node; }

  const Point& node(int n) const { return nodes_[n]; }
  const std::array<int, 6>& cell_nodes(int c) const { return cell_nodes_[c]; }
  const Triangle& cell_vertices(int c) const { return mesh_->triangles()[c]; }
  const ElementGeometry& geometry(int c) const { return geometry_[c]; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  // Boundary tag of a P2 node; NoSlip wins over Inflow, Inflow over Outflow.
  std::optional<BoundaryTag> node_tag(int n) const;
  bool is_dirichlet_node(int n) const;
  // Velocity-dof masks (length velocity_dofs()).
  std::vector<bool> dirichlet_mask(BoundaryTag tag) const;
  const std::vector<bool>& dirichlet_dofs() const { return dirichlet_dofs_; }
  // Cells touching each P2 node.
  const std::vector<std::vector<int>>& node_cells() const { return node_cells_; }

 private:
  std::shared_ptr<const Mesh> mesh_;
  std::vector<Point> nodes_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 6>> cell_nodes_;
  std::vector<ElementGeometry> geometry_;
  std::vector<std::int8_t> node_tag_;
  std::vector<bool> dirichlet_dofs_;
  std::vector<std::vector<int>> node_cells_;
};

// P2 field evaluated at a point inside cell c given barycentric coordinates.
Eigen::Vector2d eval_velocity(const TaylorHoodSpace& space, const Vec& u, int cell, const std::array<double, 3>& bary);

SpMat assemble_velocity_mass(const TaylorHoodSpace& space);
SpMat assemble_pressure_mass(const TaylorHoodSpace& space);
// Integrals of the P1 hat functions.
Vec pressure_mean_weights(const TaylorHoodSpace& space);

}  // namespace urbanrom
