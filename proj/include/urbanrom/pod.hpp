#pragma once

#include "urbanrom/errors.hpp"
#include "urbanrom/types.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace urbanrom {

enum class InnerProduct : std::uint8_t { Euclidean = 0, Mass = 1 };
enum class FieldKind : std::uint8_t { Velocity = 0, Pressure = 1, Other = 2 };

// Columns of S are solution vectors; column k belongs to params[k].
struct SnapshotSet {
  Mat S;
  std::vector<ParameterPoint> params;
  FieldKind kind = FieldKind::Velocity;
  InnerProduct inner = InnerProduct::Mass;
  std::shared_ptr<const SpMat> mass;  // required when inner == Mass

  int size() const { return static_cast<int>(S.cols()); }
  void validate() const;
  std::uint64_t hash() const;
};

struct Truncation {
  int size = -1;        // exact basis size, or
  double energy = -1.0;  // smallest size whose retained energy reaches this

  static Truncation by_size(int n) { return {n, -1.0}; }
  static Truncation by_energy(double e) { return {-1, e}; }
};

struct ReducedBasis {
  Mat V;      // N x N_rb, orthonormal in the declared inner product
  Vec sigma;  // all retained correlation eigenvalues, descending (length r)
  InnerProduct inner = InnerProduct::Euclidean;
  std::shared_ptr<const SpMat> mass;
  FieldKind kind = FieldKind::Velocity;
  std::uint64_t source_hash = 0;

  int size() const { return static_cast<int>(V.cols()); }
  int rank() const { return static_cast<int>(sigma.size()); }
  // V^T M x and V a.
  Vec project(const Vec& x) const;
  Mat project(const Mat& X) const;
  Vec lift(const Vec& a) const;
  // Leading n modes as a new basis (sigma is kept).
  ReducedBasis truncated(int n) const;
};

// C = S^T M S. Both execution modes compute each entry with the same
// arithmetic, so the results agree bitwise.
Mat correlation_matrix(const Mat& S, const SpMat* mass, Execution exec = Execution::Serial);

// Eigenvalues below 1e-14 * sigma_max are discarded before forming modes.
ReducedBasis compute_pod(const SnapshotSet& snapshots, Truncation truncation, Execution exec = Execution::Serial);

double retained_energy(const Vec& sigma, int n);
// Smallest n with retained_energy(sigma, n) >= threshold.
int energy_rank(const Vec& sigma, double threshold);

// Modified Gram-Schmidt (two passes) in the M inner product; columns whose
// norm collapses below drop_tol relative to their input norm are removed.
Mat orthonormalize(const Mat& X, const SpMat* mass, double drop_tol = 1e-10);

void save_basis(const ReducedBasis& basis, const std::string& path);
std::string serialize_basis(const ReducedBasis& basis);
// The mass matrix is not stored; pass it back for mass-weighted bases.
ReducedBasis load_basis(const std::string& path, std::shared_ptr<const SpMat> mass = nullptr);
ReducedBasis deserialize_basis(std::string bytes, std::shared_ptr<const SpMat> mass = nullptr);

}  // namespace urbanrom
