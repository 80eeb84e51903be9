#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "core/grid.hpp"
#include "core/rom.hpp"

namespace opswe {

/// Orthonormal reduction basis: the leading r left singular vectors of a
/// snapshot matrix, together with the full singular value list.
struct PodBasis {
  Eigen::MatrixXd V;       // N x r, V^T V = I
  Eigen::VectorXd sigma;   // all min(N, K) singular values, descending
  int r = 0;
  bool rank_deficient = false;  // set when sigma(r-1) < 1e-14 * sigma(0)
  std::uint64_t source_hash = 0;

  /// Leading-subspace restriction (columns are nested by construction).
  PodBasis truncated(int smaller_r) const;
};

/// SVD through the Gram matrix of the thin dimension, with the retained
/// columns re-orthonormalized.
PodBasis compute_pod(const Eigen::MatrixXd& snapshots, int r);

/// Galerkin reduction of the affine operator family by matrix-free kernel
/// evaluations: A_i through basis columns, H_j through the polarized
/// bilinear form over the r(r+1)/2 column pairs, mirrored into both
/// Kronecker slots.
rom::ReducedAffineModel intrusive_reduce(const PodBasis& basis, const Grid2D& grid, double delta);

void save_basis(const std::string& path, const PodBasis& basis, const Grid2D& grid);
PodBasis load_basis(const std::string& path, Grid2D* grid_out = nullptr);

}  // namespace opswe
