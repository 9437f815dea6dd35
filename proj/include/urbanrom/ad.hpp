#pragma once

#include "urbanrom/errors.hpp"
#include "urbanrom/taylor_hood.hpp"
#include "urbanrom/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace urbanrom {

// Instantaneous release: truncated Gaussian bump, 1 at the center, 0 at and
// beyond the radius, scaled by the amplitude and clipped to [0, 1].
struct AdSource {
  Point center;
  double radius = 1.0;
  double amplitude = 1.0;
};

Vec gaussian_source(const Mesh& mesh, const AdSource& source);

// Transient advection-diffusion with P1 elements on the mesh vertices.
// The wind is a P2 velocity vector from the flow solver (same mesh).
struct AdProblem {
  std::shared_ptr<const TaylorHoodSpace> space;
  double kappa = 0.0;
  Vec wind;     // length N_h
  Vec initial;  // length N_h,p, values in [0, 1]
  double T = 100.0;
  double dt = 1.0;
  bool supg = true;
  AdSource source;

  void validate() const;
};

enum class FluxClass : std::uint8_t { Outflow, Tangential, Inflow };

// Per mesh boundary edge (same order as Mesh::boundary()), classified by the
// sign of the edge-averaged u.n with the band |u.n| <= 1e-10 max|u|.
std::vector<FluxClass> partition_ad_boundary(const TaylorHoodSpace& space, const Vec& u);

// Streamline-diffusion parameter on a cell of diameter h.
double supg_tau(double h, const Eigen::Vector2d& u_cell, double kappa, double dt);

struct ConcentrationSeries {
  std::vector<double> times;
  std::vector<Vec> fields;
  AdSource source;
};

// Steps 0..T/dt with backward Euler; the step matrix is factorized once.
// If store_times is non-empty only those times (plus t = 0) are kept; every
// requested time must lie on the step grid.
ConcentrationSeries solve_ad(const AdProblem& problem, const std::vector<double>& store_times = {});

// The step matrix (M + M_s) + dt (K + K_adv + K_s) and the mass-side matrix
// (M + M_s), both on the full P1 space before Dirichlet elimination.
struct AdOperators {
  SpMat lhs;
  SpMat rhs;
  SpMat mass;
  std::vector<bool> dirichlet;
};
AdOperators assemble_ad(const AdProblem& problem, Execution exec = Execution::Serial);

double total_mass(const TaylorHoodSpace& space, const Vec& c);

void save_series(const ConcentrationSeries& series, const std::string& path);
ConcentrationSeries load_series(const std::string& path);
// One CSV per stored time: x,y,c.
void export_series_csv(const ConcentrationSeries& series, const Mesh& mesh, const std::string& dir);

}  // namespace urbanrom
