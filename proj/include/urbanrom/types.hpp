#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cmath>
#include <optional>

namespace urbanrom {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Serial kernels are the reference implementation; Parallel ones use OpenMP.
enum class Execution { Serial, Parallel };

// Inflow wind speed [m/s] and, for two-parameter studies, direction [deg].
struct ParameterPoint {
  double w_i = 0.0;
  std::optional<double> w_d;

  bool has_direction() const { return w_d.has_value(); }
  bool operator==(const ParameterPoint&) const = default;
};

// Training box of a reduced model. Direction bounds are present only for
// two-parameter models.
struct ParameterDomain {
  double w_i_min = 0.0;
  double w_i_max = 0.0;
  std::optional<double> w_d_min;
  std::optional<double> w_d_max;
  // Every direction counts as inside (training directions cover the circle).
  bool full_circle = false;

  bool has_direction() const { return w_d_min.has_value(); }
  bool contains(const ParameterPoint& mu, double tol = 1e-12) const {
    if (mu.w_i < w_i_min - tol || mu.w_i > w_i_max + tol) return false;
    if (has_direction() && !full_circle && mu.w_d && (*mu.w_d < *w_d_min - tol || *mu.w_d > *w_d_max + tol)) return false;
    return true;
  }
};

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

// Wraps a direction into [0, 360).
inline double wrap_degrees(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  if (w >= 360.0) w = 0.0;
  return w;
}

}  // namespace urbanrom
