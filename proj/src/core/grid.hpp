#pragma once

#include <Eigen/Core>

namespace opswe {

/// Periodic equidistant 2D grid.
///
/// Scalar fields are stored row-major with x fastest: value (i, j) lives at
/// index j*nx + i. The point at x1 is identified with the one at x0, so there
/// are exactly nx distinct points per row and dx = (x1 - x0) / nx.
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0, x1 = 0.0;
  double y0 = 0.0, y1 = 0.0;
  double dx = 0.0, dy = 0.0;

  /// Validates nx, ny >= 3 and positive extents; fills dx, dy.
  static Grid2D make(int nx, int ny, double x0, double x1, double y0, double y1);

  Eigen::Index size() const { return static_cast<Eigen::Index>(nx) * ny; }
  Eigen::Index idx(int i, int j) const { return static_cast<Eigen::Index>(j) * nx + i; }
  double x(int i) const { return x0 + i * dx; }
  double y(int j) const { return y0 + j * dy; }

  bool same_layout(const Grid2D& o) const;
};

/// Scalar field over a Grid2D; values.size() == grid.size().
struct ScalarField {
  Grid2D grid;
  Eigen::VectorXd values;

  static ScalarField zero(const Grid2D& g) { return {g, Eigen::VectorXd::Zero(g.size())}; }
};

// Second-order central differences with periodic wraparound. The raw-pointer
// kernels assume in/out of length grid.size() and in != out.
void ddx(const Grid2D& g, const double* in, double* out);
void ddy(const Grid2D& g, const double* in, double* out);

ScalarField ddx(const ScalarField& f);
ScalarField ddy(const ScalarField& f);

}  // namespace opswe
