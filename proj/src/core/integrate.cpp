#include "core/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opswe {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b* (5th minus embedded 4th order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense-output weights for the quartic continuous extension
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

double rms_scaled_norm(const VectorXd& err, const VectorXd& y0, const VectorXd& y1, double atol,
                       double rtol) {
  const Index n = err.size();
  double acc = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
    const double q = err(i) / sc;
    acc += q * q;
  }
  return std::sqrt(acc / static_cast<double>(n));
}

// Starting step size, following the usual two-evaluation heuristic.
double initial_step(const RhsFn& f, const VectorXd& y0, const VectorXd& f0, double atol,
                    double rtol, double t_span) {
  const Index n = y0.size();
  double d0 = 0.0, d1n = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double sc = atol + rtol * std::abs(y0(i));
    d0 += (y0(i) / sc) * (y0(i) / sc);
    d1n += (f0(i) / sc) * (f0(i) / sc);
  }
  d0 = std::sqrt(d0 / n);
  d1n = std::sqrt(d1n / n);
  double h0 = (d0 < 1e-5 || d1n < 1e-5) ? 1e-6 : 0.01 * (d0 / d1n);
  h0 = std::min(h0, t_span);

  VectorXd y1 = y0 + h0 * f0;
  VectorXd f1(n);
  f(y1, f1);
  double d2 = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double sc = atol + rtol * std::abs(y0(i));
    const double q = (f1(i) - f0(i)) / sc;
    d2 += q * q;
  }
  d2 = std::sqrt(d2 / n) / h0;

  const double dmax = std::max(d1n, d2);
  double h1 = (dmax <= 1e-15) ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 0.2);
  return std::min({100.0 * h0, h1, t_span});
}

}  // namespace

Trajectory integrate(const RhsFn& f, const VectorXd& w0, const IntegratorConfig& cfg) {
  if (!(cfg.rtol > 0.0) || !(cfg.atol > 0.0))
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (!(cfg.sample_dt > 0.0)) throw std::invalid_argument("integrate: sample_dt must be positive");
  if (!(cfg.t_end >= cfg.sample_dt))
    throw std::invalid_argument("integrate: t_end must be at least sample_dt");
  if (!w0.allFinite()) throw IntegrationError("integrate: non-finite initial state", 0.0);

  const Index n = w0.size();
  const Index n_samples = static_cast<Index>(std::floor(cfg.t_end / cfg.sample_dt + 1e-9)) + 1;
  const double t_last = static_cast<double>(n_samples - 1) * cfg.sample_dt;

  Trajectory traj;
  traj.times.resize(n_samples);
  for (Index k = 0; k < n_samples; ++k) traj.times[k] = static_cast<double>(k) * cfg.sample_dt;
  traj.states.resize(n, n_samples);
  traj.states.col(0) = w0;
  Index next = 1;

  VectorXd y = w0, ynew(n);
  VectorXd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), err(n);
  f(y, k1);

  double t = 0.0;
  double h = initial_step(f, y, k1, cfg.atol, cfg.rtol, t_last);
  bool rejected = false;
  long steps = 0;

  while (next < n_samples) {
    if (++steps > cfg.max_steps) throw IntegrationError("integrate: step budget exhausted", t);
    const double hmin = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
    if (h < hmin) throw IntegrationError("integrate: step size underflow", t);
    if (t + 1.01 * h >= t_last) h = t_last - t;

    ytmp = y + h * (a21 * k1);
    f(ytmp, k2);
    ytmp = y + h * (a31 * k1 + a32 * k2);
    f(ytmp, k3);
    ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    f(ytmp, k4);
    ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    f(ytmp, k5);
    ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    f(ytmp, k6);
    ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    f(ynew, k7);  // FSAL

    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double enorm = rms_scaled_norm(err, y, ynew, cfg.atol, cfg.rtol);
    if (!std::isfinite(enorm)) enorm = 10.0;  // force rejection and shrink

    if (enorm <= 1.0) {
      const double t0 = t, t1 = t + h;
      if (!ynew.allFinite()) throw IntegrationError("integrate: non-finite state", t1);

      if (next < n_samples &&
          traj.times[next] <= t1 + 1e-10 * std::max(1.0, std::abs(t1))) {
        // quartic continuous extension over the accepted step
        const VectorXd ydiff = ynew - y;
        const VectorXd bspl = h * k1 - ydiff;
        const VectorXd r4 = ydiff - h * k7 - bspl;
        const VectorXd r5 =
            h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
        while (next < n_samples &&
               traj.times[next] <= t1 + 1e-10 * std::max(1.0, std::abs(t1))) {
          double theta = (traj.times[next] - t0) / h;
          theta = std::clamp(theta, 0.0, 1.0);
          const double om = 1.0 - theta;
          traj.states.col(next) =
              y + theta * (ydiff + om * (bspl + theta * (r4 + om * r5)));
          ++next;
        }
      }

      t = t1;
      y.swap(ynew);
      k1.swap(k7);
      const double fac =
          std::min(rejected ? 1.0 : 5.0, std::max(0.2, 0.9 * std::pow(enorm, -0.2)));
      h *= fac;
      rejected = false;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(enorm, -0.2));
      rejected = true;
    }
  }
  return traj;
}

MatrixXd sample_derivatives(const Trajectory& traj, DerivativeMode mode, const RhsFn& f) {
  const Index n = traj.states.rows();
  const Index K = traj.states.cols();
  MatrixXd d(n, K);

  if (mode == DerivativeMode::ExactRhs) {
    if (!f) throw std::invalid_argument("sample_derivatives: ExactRhs mode needs the rhs");
    VectorXd col(n), out(n);
    for (Index k = 0; k < K; ++k) {
      col = traj.states.col(k);
      f(col, out);
      d.col(k) = out;
    }
    return d;
  }

  if (K < 3)
    throw std::invalid_argument("sample_derivatives: finite differences need >= 3 samples");
  const double dt = traj.times[1] - traj.times[0];
  d.col(0) = (-3.0 * traj.states.col(0) + 4.0 * traj.states.col(1) - traj.states.col(2)) /
             (2.0 * dt);
  for (Index k = 1; k + 1 < K; ++k)
    d.col(k) = (traj.states.col(k + 1) - traj.states.col(k - 1)) / (2.0 * dt);
  d.col(K - 1) =
      (3.0 * traj.states.col(K - 1) - 4.0 * traj.states.col(K - 2) + traj.states.col(K - 3)) /
      (2.0 * dt);
  return d;
}

}  // namespace opswe
