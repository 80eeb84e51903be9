#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace opswe {

struct IntegratorConfig {
  double rtol = 1e-8;
  double atol = 1e-8;
  double t_end = 1.0;
  double sample_dt = 0.1;
  long max_steps = 5'000'000;
};

/// States at the equidistant sample instants t_k = k * sample_dt.
struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd states;  // n x K, column k = state at times[k]

  Eigen::Index samples() const { return states.cols(); }
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what + " (t = " + std::to_string(t) + ")"), time(t) {}
  double time;
};

using RhsFn = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// Adaptive Dormand-Prince 5(4) integration of the autonomous system
/// dw/dt = f(w). Local error per step is kept below atol + rtol*|w|
/// componentwise (RMS-scaled); samples are produced by the method's
/// quartic dense-output interpolant, never by forcing steps onto the
/// sample instants. Sample times are constructed as k * sample_dt.
///
/// Throws IntegrationError (carrying the failure time) on step-size
/// underflow, step budget exhaustion, or a non-finite state.
Trajectory integrate(const RhsFn& f, const Eigen::VectorXd& w0, const IntegratorConfig& cfg);

enum class DerivativeMode {
  ExactRhs,          ///< column k = f(w(t_k))
  FiniteDifference,  ///< 2nd-order central in time, one-sided at the ends
};

/// Time derivatives at the sample instants. The rhs is only evaluated in
/// ExactRhs mode; FiniteDifference needs at least 3 samples.
Eigen::MatrixXd sample_derivatives(const Trajectory& traj, DerivativeMode mode,
                                   const RhsFn& f = {});

}  // namespace opswe
