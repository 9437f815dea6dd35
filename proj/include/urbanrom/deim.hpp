#pragma once

#include "urbanrom/errors.hpp"
#include "urbanrom/types.hpp"

#include <vector>

namespace urbanrom {

// Discrete empirical interpolation: f ~ U (P^T U)^{-1} P^T f.
struct DeimData {
  Mat U;                     // N x m collateral basis (Euclidean-orthonormal)
  std::vector<int> indices;  // m interpolation rows, greedy order
  Mat PtU;                   // U restricted to the indices (m x m)

  int size() const { return static_cast<int>(indices.size()); }
  // U (P^T U)^{-1} values, where values are f at the indices.
  Vec reconstruct(const Vec& values) const;
  Vec sample(const Vec& f) const;
};

// Collateral basis from a Euclidean POD of the columns of F, then greedy
// index selection. Throws TruncationError with the attainable size when the
// collateral rank is below m.
DeimData build_deim(const Mat& F, int m);

// Greedy selection on an orthonormal basis (exposed for tests).
std::vector<int> deim_indices(const Mat& U);

}  // namespace urbanrom
