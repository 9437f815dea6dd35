#pragma once

#include "urbanrom/errors.hpp"
#include "urbanrom/taylor_hood.hpp"
#include "urbanrom/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace urbanrom {

// How the parameter enters the Dirichlet data g(mu) = sum_q theta_q(mu) G_q.
enum class InflowMode {
  Speed,           // theta = [w_i]
  SpeedDirection,  // theta = [w_i cos w_d, w_i sin w_d]
};

// Steady incompressible Navier-Stokes on a Taylor-Hood space.
//
// Dirichlet data lives on Inflow nodes (g(mu)) and NoSlip nodes (zero);
// Outflow is do-nothing. The profiles G_q are full-length velocity vectors
// supported on Inflow nodes only, so g is affine in theta.
struct InsProblem {
  std::shared_ptr<const TaylorHoodSpace> space;
  double nu = 1.0;
  InflowMode mode = InflowMode::Speed;
  std::vector<Vec> profiles;
  bool enclosed = false;

  // Uniform inflow: inward unit normal (Speed) or unit x / unit y vectors
  // (SpeedDirection) on every Inflow node.
  static InsProblem uniform(std::shared_ptr<const TaylorHoodSpace> space, double nu, InflowMode mode);
  // Single custom profile, theta = [w_i]. The profile is sampled at Inflow nodes.
  template <typename F>
  static InsProblem custom(std::shared_ptr<const TaylorHoodSpace> space, double nu, F&& profile);

  int num_affine_terms() const { return static_cast<int>(profiles.size()); }
  Vec theta(const ParameterPoint& mu) const;
  // Full-length vector holding the Dirichlet values (zero on free dofs).
  Vec dirichlet_values(const ParameterPoint& mu) const;
  void validate() const;
};

struct NewtonOptions {
  double tolerance = 1e-10;  // absolute, on the free residual with momentum rows divided by nu
  int max_iterations = 50;
  bool stokes_initial_guess = true;
  bool continuation = true;  // continuation in w_i when Newton from the initial guess fails
  double delta_re = 50.0;
  int max_continuation_steps = 256;
  Execution execution = Execution::Serial;
};

struct FlowSolution {
  Vec u;  // length N_h
  Vec p;  // length N_h,p
  ParameterPoint mu;
  int newton_iterations = 0;
  double residual_norm = 0.0;
  std::vector<double> residual_history;
};

// Operators of the discrete saddle-point system on the full (unconstrained)
// velocity space. Dirichlet rows are eliminated only when the Newton system
// is built, so these are directly projectable for the ROM.
struct AssembledSystem {
  SpMat A;  // nu * vector Laplacian
  SpMat B;  // -int psi div(phi), N_h,p x N_h
  SpMat C;  // C(u): int phi_i (u . grad) phi_j per component
  SpMat J;  // derivative of C(u)u, i.e. C(u) + N(u)
  Vec f;    // body force (zero)
  Vec g;    // continuity right-hand side (zero)
};

// Parameter-independent pieces, assembled once per problem.
struct LinearOperators {
  SpMat A;
  SpMat B;
  Vec mean_weights;
};

LinearOperators assemble_linear(const InsProblem& problem, Execution exec = Execution::Serial);
SpMat assemble_stiffness(const TaylorHoodSpace& space, Execution exec = Execution::Serial);
SpMat assemble_divergence(const TaylorHoodSpace& space, Execution exec = Execution::Serial);
// c(u) = C(u)u; if jac != nullptr also its Jacobian.
Vec assemble_convection(const TaylorHoodSpace& space, const Vec& u, SpMat* jac, Execution exec = Execution::Serial);
SpMat assemble_convection_operator(const TaylorHoodSpace& space, const Vec& w, Execution exec = Execution::Serial);

AssembledSystem assemble_ins(const InsProblem& problem, const Vec& state, Execution exec = Execution::Serial);

// Residual of the momentum and continuity equations on the full dof set.
struct InsResidual {
  Vec momentum;    // length N_h (Dirichlet rows included, unconstrained)
  Vec continuity;  // length N_h,p
};
InsResidual ins_residual(const InsProblem& problem, const LinearOperators& ops, const Vec& u, const Vec& p,
                         Execution exec = Execution::Serial);

// Stokes solution (convection dropped) for the Dirichlet data of mu.
FlowSolution solve_stokes(const InsProblem& problem, const ParameterPoint& mu);
// Stokes solution for arbitrary full-length Dirichlet values.
FlowSolution solve_stokes_with(const InsProblem& problem, const Vec& dirichlet_values);

FlowSolution solve_steady_ins(const InsProblem& problem, const ParameterPoint& mu, const NewtonOptions& opts = {});
// Newton from an explicit initial velocity (Dirichlet entries are overwritten).
FlowSolution solve_steady_ins_from(const InsProblem& problem, const ParameterPoint& mu, const Vec& u0,
                                   const NewtonOptions& opts = {});

double reynolds_number(const InsProblem& problem, const FlowSolution& solution);
double max_velocity_magnitude(const TaylorHoodSpace& space, const Vec& u);

void save_flow(const FlowSolution& sol, double nu, const std::string& path);
FlowSolution load_flow(const std::string& path, double* nu = nullptr);

template <typename F>
InsProblem InsProblem::custom(std::shared_ptr<const TaylorHoodSpace> space, double nu, F&& profile) {
  InsProblem pb;
  pb.nu = nu;
  pb.mode = InflowMode::Speed;
  pb.enclosed = space->mesh().enclosed();
  Vec g = Vec::Zero(space->velocity_dofs());
  for (int n = 0; n < space->num_nodes(); ++n) {
    if (space->node_tag(n) != BoundaryTag::Inflow) continue;
    const Eigen::Vector2d v = profile(space->node(n));
    g[space->ux(n)] = v.x();
    g[space->uy(n)] = v.y();
  }
  pb.profiles.push_back(std::move(g));
  pb.space = std::move(space);
  pb.validate();
  return pb;
}

}  // namespace urbanrom
