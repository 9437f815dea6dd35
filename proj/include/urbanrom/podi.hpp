#pragma once

#include "urbanrom/pod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace urbanrom {

enum class RbfKernel { ThinPlate };
// Wind direction as (cos, sin) on the unit-diameter circle, or as a plain
// normalized scalar.
enum class AngleEmbedding { CosSin, Scalar };

struct PodiOptions {
  RbfKernel kernel = RbfKernel::ThinPlate;
  AngleEmbedding angle = AngleEmbedding::CosSin;
  bool polynomial = false;  // append a linear polynomial term
};

// phi(d) = d^2 log d, phi(0) = 0.
double tps_kernel(double d);

// Affine map of the training box onto the unit cube (plus the angle embedding).
struct ParameterNormalization {
  double w_i_lo = 0.0, w_i_span = 1.0;
  bool direction = false;
  AngleEmbedding angle = AngleEmbedding::CosSin;
  double w_d_lo = 0.0, w_d_span = 1.0;

  static ParameterNormalization fit(const std::vector<ParameterPoint>& params, AngleEmbedding angle);
  int dim() const { return direction ? (angle == AngleEmbedding::CosSin ? 3 : 2) : 1; }
  Vec apply(const ParameterPoint& mu) const;
};

struct PodiArtifact {
  PodiOptions options;
  ParameterNormalization norm;
  ParameterDomain domain;
  std::vector<ParameterPoint> train_params;
  Mat centers;  // dim x N_s normalized training points
  Mat V;        // N_h x N_rb
  Mat coeffs;   // N_rb x N_s projected snapshots
  Mat weights;  // N_rb x N_s
  Mat poly;     // N_rb x (dim + 1), empty without augmentation
  // Optional pressure model, same centers.
  Mat P, p_coeffs, p_weights, p_poly;
  std::uint64_t snapshot_hash = 0;

  int size() const { return static_cast<int>(V.cols()); }
  bool has_pressure() const { return P.cols() > 0; }
};

// Basis from a POD of the snapshots (mass-weighted if the set says so).
PodiArtifact train_podi(const SnapshotSet& snapshots, int n_rb, const PodiOptions& opts = {});
// Reuses a precomputed basis (truncated to n_rb); used by size sweeps.
PodiArtifact train_podi(const ReducedBasis& basis, const SnapshotSet& snapshots, int n_rb, const PodiOptions& opts = {});
// Adds an interpolated pressure model to a trained artifact.
void attach_podi_pressure(PodiArtifact& art, const ReducedBasis& basis, const SnapshotSet& pressure, int n_rb_p);

Vec podi_coefficients(const PodiArtifact& art, const ParameterPoint& mu);
Vec evaluate_podi(const PodiArtifact& art, const ParameterPoint& mu);
Vec evaluate_podi_pressure(const PodiArtifact& art, const ParameterPoint& mu);
bool podi_extrapolated(const PodiArtifact& art, const ParameterPoint& mu);

std::string serialize_podi(const PodiArtifact& art);
PodiArtifact deserialize_podi(std::string bytes);
void save_podi(const PodiArtifact& art, const std::string& path);
PodiArtifact load_podi(const std::string& path);

}  // namespace urbanrom
