#pragma once

// Element-level integrals on affine triangles. Quadrature is the 7-point
// degree-5 rule, exact for every P2/P1 integrand appearing in the flow and
// transport operators (the trilinear convection term is degree 5).

#include "urbanrom/taylor_hood.hpp"

#include <Eigen/Dense>

#include <array>

namespace urbanrom::fe {

inline constexpr int kQuadPoints = 7;

struct QuadRule {
  std::array<std::array<double, 3>, kQuadPoints> bary;
  std::array<double, kQuadPoints> weight;  // sums to 1 (scaled by the area)
};

const QuadRule& quad_rule();

// P2 basis values and barycentric derivatives at the quadrature points.
struct P2Table {
  std::array<std::array<double, 6>, kQuadPoints> value;
  // dphi_dbary[q][i][a] = d phi_i / d lambda_a
  std::array<std::array<std::array<double, 3>, 6>, kQuadPoints> dphi_dbary;
};

const P2Table& p2_table();

std::array<double, 6> p2_values(const std::array<double, 3>& bary);

// Physical P2 gradients at quadrature point q.
std::array<Eigen::Vector2d, 6> p2_gradients(const ElementGeometry& g, int q);

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat12 = Eigen::Matrix<double, 12, 12>;
using Vec12 = Eigen::Matrix<double, 12, 1>;
using Mat3x12 = Eigen::Matrix<double, 3, 12>;
using Mat3 = Eigen::Matrix3d;

// int grad phi_i . grad phi_j
Mat6 p2_stiffness(const ElementGeometry& g);
Mat6 p2_mass(const ElementGeometry& g);
// -int psi_k d_c phi_j, columns ordered (x-dofs 0..5, y-dofs 0..5)
Mat3x12 divergence(const ElementGeometry& g);

// Local velocity layout: [ux_0..ux_5, uy_0..uy_5].
// C(w): int phi_i (w . grad) phi_j, applied per component.
Mat12 convection_operator(const ElementGeometry& g, const Vec12& w);
// Returns c(u) = C(u) u and, if jac != nullptr, its Jacobian C(u) + N(u).
Vec12 convection(const ElementGeometry& g, const Vec12& u, Mat12* jac);
// Single row (component comp, local node i) of c(u) and its gradient w.r.t. u.
double convection_row(const ElementGeometry& g, const Vec12& u, int comp, int i, Vec12* grad);

Mat3 p1_mass(const ElementGeometry& g);
Mat3 p1_stiffness(const ElementGeometry& g);

}  // namespace urbanrom::fe
