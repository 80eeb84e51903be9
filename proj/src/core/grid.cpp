#include "core/grid.hpp"

#include <stdexcept>

namespace opswe {

Grid2D Grid2D::make(int nx, int ny, double x0, double x1, double y0, double y1) {
  if (nx < 3 || ny < 3)
    throw std::invalid_argument("Grid2D: need nx >= 3 and ny >= 3 for central differences");
  if (!(x1 > x0) || !(y1 > y0))
    throw std::invalid_argument("Grid2D: domain bounds must satisfy x1 > x0, y1 > y0");
  Grid2D g;
  g.nx = nx;
  g.ny = ny;
  g.x0 = x0;
  g.x1 = x1;
  g.y0 = y0;
  g.y1 = y1;
  g.dx = (x1 - x0) / nx;
  g.dy = (y1 - y0) / ny;
  return g;
}

bool Grid2D::same_layout(const Grid2D& o) const {
  return nx == o.nx && ny == o.ny && x0 == o.x0 && x1 == o.x1 && y0 == o.y0 && y1 == o.y1;
}

void ddx(const Grid2D& g, const double* in, double* out) {
  const double s = 1.0 / (2.0 * g.dx);
  const int nx = g.nx;
  for (int j = 0; j < g.ny; ++j) {
    const double* row = in + static_cast<std::ptrdiff_t>(j) * nx;
    double* o = out + static_cast<std::ptrdiff_t>(j) * nx;
    o[0] = (row[1] - row[nx - 1]) * s;
    for (int i = 1; i < nx - 1; ++i) o[i] = (row[i + 1] - row[i - 1]) * s;
    o[nx - 1] = (row[0] - row[nx - 2]) * s;
  }
}

void ddy(const Grid2D& g, const double* in, double* out) {
  const double s = 1.0 / (2.0 * g.dy);
  const int nx = g.nx;
  const int ny = g.ny;
  for (int j = 0; j < ny; ++j) {
    const int jm = (j == 0) ? ny - 1 : j - 1;
    const int jp = (j == ny - 1) ? 0 : j + 1;
    const double* up = in + static_cast<std::ptrdiff_t>(jp) * nx;
    const double* dn = in + static_cast<std::ptrdiff_t>(jm) * nx;
    double* o = out + static_cast<std::ptrdiff_t>(j) * nx;
    for (int i = 0; i < nx; ++i) o[i] = (up[i] - dn[i]) * s;
  }
}

ScalarField ddx(const ScalarField& f) {
  ScalarField out{f.grid, Eigen::VectorXd(f.values.size())};
  ddx(f.grid, f.values.data(), out.values.data());
  return out;
}

ScalarField ddy(const ScalarField& f) {
  ScalarField out{f.grid, Eigen::VectorXd(f.values.size())};
  ddy(f.grid, f.values.data(), out.values.data());
  return out;
}

}  // namespace opswe
