#pragma once

#include "urbanrom/deim.hpp"
#include "urbanrom/ins.hpp"
#include "urbanrom/pod.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace urbanrom {

// One cell of the reduced mesh: it contributes to DEIM sample `sample`
// through local node `local` and velocity component `comp`.
struct DeimCell {
  int sample = 0;
  int local = 0;
  int comp = 0;
  std::array<int, 12> dofs{};  // global velocity dofs of the cell
  ElementGeometry geometry;
  Mat V_loc;  // 12 x n_u, rows of the velocity basis at the cell's dofs
  Mat L_loc;  // 12 x Q, rows of the lifting fields
};

// Intrusive POD-Galerkin model with DEIM for the convective term. The
// velocity is u = sum_q theta_q(mu) L_q + V a, pressure p = P b.
struct PodgArtifact {
  double nu = 1.0;
  InflowMode mode = InflowMode::Speed;
  ParameterDomain domain;
  int n_pod = 0;  // velocity POD modes; V has n_pod + supremizers columns

  Mat A_hat;             // V^T A V
  Mat B_hat;             // P^T B V
  Mat A_lift;            // n_u x Q, columns V^T A L_q
  Mat B_lift;            // n_p x Q, columns P^T B L_q
  Mat D;                 // V^T U (P^T U)^{-1}
  std::vector<DeimCell> deim_cells;
  int n_deim = 0;

  std::vector<ParameterPoint> train_params;
  Mat train_coeffs;  // (n_u + n_p) x N_s reduced coordinates of the snapshots

  Mat V;        // N_h x n_u
  Mat P;        // N_h,p x n_p
  Mat lifting;  // N_h x Q
  std::uint64_t snapshot_hash = 0;

  int n_u() const { return static_cast<int>(A_hat.rows()); }
  int n_p() const { return static_cast<int>(B_hat.rows()); }
  Vec theta(const ParameterPoint& mu) const;
};

struct ReducedSolution {
  Vec u_hat;
  Vec p_hat;
  ParameterPoint mu;
  int iterations = 0;
  double residual = 0.0;
  bool extrapolated = false;
};

struct ReducedNewtonOptions {
  double tolerance = 1e-10;  // same scaling convention as the full-order Newton
  int max_iterations = 100;
};

// Offline data shared by every basis size: lifting, POD of velocity and
// pressure, supremizers and the DEIM collateral basis. Maximum sizes above
// the snapshot (or collateral) rank are capped at that rank; make() throws
// TruncationError past the cap.
class PodgTrainer {
 public:
  PodgTrainer(const InsProblem& fom, const std::vector<FlowSolution>& snapshots, int max_rb, int max_rb_p, int n_deim,
              const ParameterDomain& domain);

  PodgArtifact make(int n_rb, int n_rb_p) const;

  int max_rb() const { return vel_.size(); }
  int max_rb_p() const { return pres_.size(); }

  const ReducedBasis& velocity_basis() const { return vel_; }
  const ReducedBasis& pressure_basis() const { return pres_; }
  const DeimData& deim() const { return deim_; }
  const Mat& supremizers() const { return sup_; }
  const Mat& lifting() const { return lifting_; }

 private:
  InsProblem fom_;
  ParameterDomain domain_;
  std::vector<FlowSolution> snaps_;
  SpMat A_, B_;
  std::shared_ptr<const SpMat> Mu_, Mp_;
  Mat lifting_;
  ReducedBasis vel_, pres_;
  Mat sup_;
  DeimData deim_;
  std::uint64_t hash_ = 0;
};

// Throws TruncationError when any requested size exceeds the attainable rank.
PodgArtifact train_podg(const InsProblem& fom, const std::vector<FlowSolution>& snapshots, int n_rb, int n_rb_p,
                        int n_deim, const ParameterDomain& domain);

ReducedSolution evaluate_podg(const PodgArtifact& art, const ParameterPoint& mu, const ReducedNewtonOptions& opts = {});
// Same reduced Newton with the exact projected convection (full assembly);
// reference for tests of the hyper-reduction.
ReducedSolution evaluate_podg_exact(const PodgArtifact& art, const InsProblem& fom, const ParameterPoint& mu,
                                    const ReducedNewtonOptions& opts = {});

Vec podg_velocity(const PodgArtifact& art, const ReducedSolution& sol);
Vec podg_pressure(const PodgArtifact& art, const ReducedSolution& sol);

// [V^T R_momentum; P^T R_continuity] of the full-order residual at the lifted
// reduced solution.
Vec podg_projected_residual(const PodgArtifact& art, const InsProblem& fom, const ReducedSolution& sol);

std::string serialize_podg(const PodgArtifact& art);
PodgArtifact deserialize_podg(std::string bytes);
void save_podg(const PodgArtifact& art, const std::string& path);
PodgArtifact load_podg(const std::string& path);

}  // namespace urbanrom
