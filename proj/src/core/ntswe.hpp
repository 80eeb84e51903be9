#pragma once

#include <array>

#include <Eigen/Core>

#include "core/grid.hpp"

namespace opswe::ntswe {

/// Physical parameters of the rotating shallow water model with the
/// non-traditional (horizontal) Coriolis contribution retained.
///
/// The rotation axis is parametrized by the latitude angle theta with the
/// x-axis aligned East, so the angular velocity components reduce to
/// (0, cos(theta), sin(theta)). Bottom topography is flat.
struct PhysicalParams {
  double delta = 0.145;  ///< non-traditional parameter (layer depth / deformation radius)
  double theta = 0.0;    ///< latitude angle in radians, (0, pi/2)
};

/// The semi-discrete right-hand side is an exactly quadratic polynomial in
/// the stacked canonical state w = [u~; v~; h] and splits into three linear
/// and three quadratic operators with scalar coefficients in theta only:
///
///   rhs(w; theta) = sum_i alpha_i(theta) A_i w + sum_j eta_j(theta) H_j (w (x) w)
///
/// delta is folded into the constant operators.
enum class AffineTerm {
  LinPressure = 0,    ///< (-h_x, -h_y, 0);          alpha_1 = 1
  LinCoriolis = 1,    ///< (v~, -u~, 0);             alpha_2 = sin(theta)
  LinNonTrad = 2,     ///< (0, (delta/2) h, 0);      alpha_3 = sin(theta) cos(theta)
  QuadTransport = 3,  ///< advection + divergence;   eta_1 = 1
  QuadNonTrad = 4,    ///< delta-weighted couplings; eta_2 = cos(theta)
  QuadNonTradSq = 5,  ///< delta^2 height terms;     eta_3 = cos^2(theta)
};

inline constexpr std::array<AffineTerm, 3> kLinearTerms = {
    AffineTerm::LinPressure, AffineTerm::LinCoriolis, AffineTerm::LinNonTrad};
inline constexpr std::array<AffineTerm, 3> kQuadraticTerms = {
    AffineTerm::QuadTransport, AffineTerm::QuadNonTrad, AffineTerm::QuadNonTradSq};

std::array<double, 3> alpha_coeffs(double theta);  ///< {1, sin, sin*cos}
std::array<double, 3> eta_coeffs(double theta);    ///< {1, cos, cos^2}

/// Scratch buffers for rhs_into; reusing one per thread avoids per-call
/// allocation in the integrator hot loop.
struct RhsWorkspace {
  Eigen::ArrayXd u_particle, qh, phi, t1, t2;
  void resize(Eigen::Index m);
};

/// dw/dt of the canonical-velocity form: u~_t = (qh) v - Phi_x,
/// v~_t = -(qh) u - Phi_y, h_t = -(h u)_x - (h v)_y, with
/// qh = sin(theta) + v~_x - u~_y and the Bernoulli head Phi evaluated
/// pointwise before differencing. w and dw have length 3*g.size().
void rhs_into(const Grid2D& g, const PhysicalParams& p, const double* w, double* dw,
              RhsWorkspace& ws);

Eigen::VectorXd rhs(const Grid2D& g, const PhysicalParams& p, const Eigen::VectorXd& w);

/// One coefficient-free affine piece (see AffineTerm). Exactly linear for the
/// Lin* kinds and exactly homogeneous quadratic for the Quad* kinds.
Eigen::VectorXd rhs_affine_term(const Grid2D& g, double delta, const Eigen::VectorXd& w,
                                AffineTerm kind);

/// Symmetric bilinear form of a quadratic piece via polarization:
/// B(x, y) = (Q(x + y) - Q(x) - Q(y)) / 2 where Q(w) = rhs_affine_term(w).
Eigen::VectorXd bilinear_term(const Grid2D& g, double delta, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& y, AffineTerm kind);

/// Dense test oracles, restricted to tiny grids (3*nx*ny <= kDenseOracleCap).
inline constexpr Eigen::Index kDenseOracleCap = 400;

/// A_i assembled column-by-column from unit vectors.
Eigen::MatrixXd assemble_dense_linear(const Grid2D& g, double delta, AffineTerm kind);

/// H_j (w (x) w) evaluated as a brute-force contraction over all basis pairs
/// sum_{a,b} w_a w_b B(e_a, e_b); independent of the direct quadratic sweep.
Eigen::VectorXd dense_quadratic_contract(const Grid2D& g, double delta,
                                         const Eigen::VectorXd& w, AffineTerm kind);

/// Motionless height bulge on [-5,5]^2: h = 1 + exp(-(4x/5)^2 - (4y/5)^2)/2,
/// zero particle velocity, converted to canonical velocities.
Eigen::VectorXd initial_geostrophic(const Grid2D& g, const PhysicalParams& p);

/// Perturbed shear layer on [0,10]^2 (dh = 0.2, dy = 0.5, L = 10),
/// converted to canonical velocities. Requires sin(theta) != 0.
Eigen::VectorXd initial_shear(const Grid2D& g, const PhysicalParams& p);

}  // namespace opswe::ntswe
