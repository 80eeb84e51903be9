#include "core/ntswe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace opswe::ntswe {

namespace {

using Eigen::ArrayXd;
using Eigen::Index;
using Eigen::Map;
using Eigen::VectorXd;

using CArr = Map<const ArrayXd>;
using Arr = Map<ArrayXd>;

void check_state_size(const Grid2D& g, Index n) {
  if (n != 3 * g.size()) throw std::invalid_argument("ntswe: state length must be 3*nx*ny");
}

}  // namespace

std::array<double, 3> alpha_coeffs(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return {1.0, s, s * c};
}

std::array<double, 3> eta_coeffs(double theta) {
  const double c = std::cos(theta);
  return {1.0, c, c * c};
}

void RhsWorkspace::resize(Index m) {
  if (u_particle.size() == m) return;
  u_particle.resize(m);
  qh.resize(m);
  phi.resize(m);
  t1.resize(m);
  t2.resize(m);
}

void rhs_into(const Grid2D& g, const PhysicalParams& p, const double* w, double* dw,
              RhsWorkspace& ws) {
  const Index m = g.size();
  ws.resize(m);

  CArr ut(w, m), vt(w + m, m), h(w + 2 * m, m);
  Arr dut(dw, m), dvt(dw + m, m), dh(dw + 2 * m, m);

  const double s = std::sin(p.theta);
  const double beta = 0.5 * p.delta * std::cos(p.theta);

  // particle velocities (v = v~ since the x rotation component vanishes)
  ws.u_particle = ut - beta * h;

  // qh = sin(theta) + v~_x - u~_y  (the 1/h of the potential vorticity cancels)
  ddx(g, vt.data(), ws.t1.data());
  ddy(g, ut.data(), ws.t2.data());
  ws.qh = s + ws.t1 - ws.t2;

  // Bernoulli head, assembled pointwise before differencing
  ws.phi = 0.5 * (ws.u_particle.square() + vt.square()) + h - beta * h * ws.u_particle;

  ddx(g, ws.phi.data(), ws.t1.data());
  dut = ws.qh * vt - ws.t1;
  ddy(g, ws.phi.data(), ws.t1.data());
  dvt = -ws.qh * ws.u_particle - ws.t1;

  // conservative continuity: h_t = -(h u)_x - (h v)_y
  ws.t1 = h * ws.u_particle;
  ddx(g, ws.t1.data(), ws.t2.data());
  dh = -ws.t2;
  ws.t1 = h * vt;
  ddy(g, ws.t1.data(), ws.t2.data());
  dh -= ws.t2;
}

VectorXd rhs(const Grid2D& g, const PhysicalParams& p, const VectorXd& w) {
  check_state_size(g, w.size());
  VectorXd out(w.size());
  RhsWorkspace ws;
  rhs_into(g, p, w.data(), out.data(), ws);
  return out;
}

VectorXd rhs_affine_term(const Grid2D& g, double delta, const VectorXd& w, AffineTerm kind) {
  check_state_size(g, w.size());
  const Index m = g.size();
  CArr ut(w.data(), m), vt(w.data() + m, m), h(w.data() + 2 * m, m);

  VectorXd out = VectorXd::Zero(w.size());
  Arr du(out.data(), m), dv(out.data() + m, m), dh(out.data() + 2 * m, m);

  ArrayXd t1(m), t2(m), t3(m);

  switch (kind) {
    case AffineTerm::LinPressure:
      ddx(g, h.data(), t1.data());
      du = -t1;
      ddy(g, h.data(), t1.data());
      dv = -t1;
      break;

    case AffineTerm::LinCoriolis:
      du = vt;
      dv = -ut;
      break;

    case AffineTerm::LinNonTrad:
      dv = 0.5 * delta * h;
      break;

    case AffineTerm::QuadTransport: {
      ddx(g, vt.data(), t1.data());  // v~_x
      ddy(g, ut.data(), t2.data());  // u~_y
      t3 = 0.5 * (ut.square() + vt.square());
      ArrayXd ke_x(m);
      ddx(g, t3.data(), ke_x.data());
      du = vt * (t1 - t2) - ke_x;
      ddy(g, t3.data(), ke_x.data());
      dv = -ut * (t1 - t2) - ke_x;
      t3 = h * ut;
      ddx(g, t3.data(), t1.data());
      dh = -t1;
      t3 = h * vt;
      ddy(g, t3.data(), t1.data());
      dh -= t1;
      break;
    }

    case AffineTerm::QuadNonTrad: {
      t3 = ut * h;
      ddx(g, t3.data(), t1.data());
      du = delta * t1;
      ddy(g, t3.data(), t1.data());
      ddx(g, vt.data(), t2.data());
      ArrayXd uy(m);
      ddy(g, ut.data(), uy.data());
      dv = delta * (t1 + 0.5 * h * (t2 - uy));
      t3 = h * h;
      ddx(g, t3.data(), t1.data());
      dh = 0.5 * delta * t1;
      break;
    }

    case AffineTerm::QuadNonTradSq: {
      const double c = -0.375 * delta * delta;
      t3 = h * h;
      ddx(g, t3.data(), t1.data());
      du = c * t1;
      ddy(g, t3.data(), t1.data());
      dv = c * t1;
      break;
    }

    default:
      throw std::invalid_argument("ntswe: unknown affine term kind");
  }
  return out;
}

VectorXd bilinear_term(const Grid2D& g, double delta, const VectorXd& x, const VectorXd& y,
                       AffineTerm kind) {
  if (kind != AffineTerm::QuadTransport && kind != AffineTerm::QuadNonTrad &&
      kind != AffineTerm::QuadNonTradSq)
    throw std::invalid_argument("ntswe: bilinear_term needs a quadratic kind");
  const VectorXd qxy = rhs_affine_term(g, delta, x + y, kind);
  const VectorXd qx = rhs_affine_term(g, delta, x, kind);
  const VectorXd qy = rhs_affine_term(g, delta, y, kind);
  return 0.5 * (qxy - qx - qy);
}

Eigen::MatrixXd assemble_dense_linear(const Grid2D& g, double delta, AffineTerm kind) {
  const Index n = 3 * g.size();
  if (n > kDenseOracleCap)
    throw std::invalid_argument("ntswe: dense oracle restricted to 3*nx*ny <= 400");
  if (kind != AffineTerm::LinPressure && kind != AffineTerm::LinCoriolis &&
      kind != AffineTerm::LinNonTrad)
    throw std::invalid_argument("ntswe: assemble_dense_linear needs a linear kind");
  Eigen::MatrixXd A(n, n);
  VectorXd e = VectorXd::Zero(n);
  for (Index c = 0; c < n; ++c) {
    e(c) = 1.0;
    A.col(c) = rhs_affine_term(g, delta, e, kind);
    e(c) = 0.0;
  }
  return A;
}

VectorXd dense_quadratic_contract(const Grid2D& g, double delta, const VectorXd& w,
                                  AffineTerm kind) {
  const Index n = 3 * g.size();
  if (n > kDenseOracleCap)
    throw std::invalid_argument("ntswe: dense oracle restricted to 3*nx*ny <= 400");
  check_state_size(g, w.size());
  VectorXd acc = VectorXd::Zero(n);
  VectorXd ea = VectorXd::Zero(n), eb = VectorXd::Zero(n);
  for (Index a = 0; a < n; ++a) {
    if (w(a) == 0.0) continue;
    ea(a) = 1.0;
    for (Index b = a; b < n; ++b) {
      if (w(b) == 0.0) continue;
      eb(b) = 1.0;
      const VectorXd bab = bilinear_term(g, delta, ea, eb, kind);
      const double f = (a == b) ? w(a) * w(a) : 2.0 * w(a) * w(b);
      acc += f * bab;
      eb(b) = 0.0;
    }
    ea(a) = 0.0;
  }
  return acc;
}

namespace {

void check_domain(const Grid2D& g, double x0, double x1, double y0, double y1,
                  const char* name) {
  const double tol = 1e-9;
  if (std::abs(g.x0 - x0) > tol || std::abs(g.x1 - x1) > tol || std::abs(g.y0 - y0) > tol ||
      std::abs(g.y1 - y1) > tol)
    throw std::invalid_argument(std::string("ntswe: ") + name + " expects the domain [" +
                                std::to_string(x0) + "," + std::to_string(x1) + "]x[" +
                                std::to_string(y0) + "," + std::to_string(y1) + "]");
}

// u = u~ - delta Omega^y (h/2)  =>  u~ = u + beta h with beta = delta cos(theta)/2.
// v~ = v exactly because Omega^x = 0.
VectorXd to_canonical(const Grid2D& g, const PhysicalParams& p, const ArrayXd& u,
                      const ArrayXd& v, const ArrayXd& h) {
  const Index m = g.size();
  const double beta = 0.5 * p.delta * std::cos(p.theta);
  VectorXd w(3 * m);
  Arr(w.data(), m) = u + beta * h;
  Arr(w.data() + m, m) = v;
  Arr(w.data() + 2 * m, m) = h;
  return w;
}

}  // namespace

VectorXd initial_geostrophic(const Grid2D& g, const PhysicalParams& p) {
  check_domain(g, -5.0, 5.0, -5.0, 5.0, "initial_geostrophic");
  const Index m = g.size();
  ArrayXd h(m);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double ax = 4.0 * g.x(i) / 5.0;
      const double ay = 4.0 * g.y(j) / 5.0;
      h(g.idx(i, j)) = 1.0 + 0.5 * std::exp(-ax * ax - ay * ay);
    }
  return to_canonical(g, p, ArrayXd::Zero(m), ArrayXd::Zero(m), h);
}

VectorXd initial_shear(const Grid2D& g, const PhysicalParams& p) {
  check_domain(g, 0.0, 10.0, 0.0, 10.0, "initial_shear");
  const double omega_z = std::sin(p.theta);
  if (omega_z == 0.0)
    throw std::invalid_argument("ntswe: initial_shear requires sin(theta) != 0");

  constexpr double kDeltaH = 0.2;
  constexpr double kDeltaY = 0.5;
  constexpr double kLength = 10.0;
  constexpr double kPi = std::numbers::pi;
  const double two_pi_over_l = 2.0 * kPi / kLength;

  const Index m = g.size();
  ArrayXd h(m), u(m), v(m);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const double cx = std::cos(two_pi_over_l * g.x(i));
      const double phase = two_pi_over_l * (g.y(j) - kDeltaY * std::sin(two_pi_over_l * g.x(i)));
      const Index k = g.idx(i, j);
      h(k) = 1.0 + kDeltaH * std::sin(phase);
      u(k) = -(2.0 * kPi * kDeltaH / (omega_z * kLength)) * std::cos(phase);
      v(k) = -(4.0 * kPi * kPi * kDeltaH * kDeltaY / (omega_z * kLength * kLength)) *
             std::cos(phase) * cx;
    }
  return to_canonical(g, p, u, v, h);
}

}  // namespace opswe::ntswe
