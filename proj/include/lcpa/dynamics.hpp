#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lcpa/cavity.hpp"
#include "lcpa/density.hpp"
#include "lcpa/params.hpp"

namespace lcpa {

struct SystemState {
  DensityMatrix3 rho;
  cplx alpha;
  double time = 0.0;  // units of 1/gamma
};

struct IntegratorOptions {
  double dt = 1e-3;
  double min_dt = 1e-9;
  double max_trace_drift = 1e-8;
  std::size_t record_every = 1000;  // steps between stored states
};

struct Trajectory {
  std::vector<SystemState> states;  // first is the initial state, last the terminal one
  bool converged = false;           // derivative max-norm fell below tol
  double derivative_norm = 0.0;     // at the terminal state
  std::size_t steps = 0;

  const SystemState& terminal() const { return states.back(); }
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, SystemState last)
      : std::runtime_error(what), last_(std::move(last)) {}
  const SystemState& last_valid() const { return last_; }

 private:
  SystemState last_;
};

/// Classical fourth-order Runge-Kutta on the full mean-field system. The step
/// is halved on a non-finite result or on trace drift, and integration stops
/// early once the state derivative max-norm drops below tol.
Trajectory time_evolve(const SystemState& initial, const DriveConfig& drive,
                       const SystemParams& p, double horizon, double tol,
                       const IntegratorOptions& opt = {});

/// Max-norm of the time derivative at a state.
double derivative_norm(const SystemState& s, const DriveConfig& drive, const SystemParams& p);

/// Real coordinates with the trace eliminated:
/// [rho11, rho22, Re rho12, Im rho12, Re rho13, Im rho13, Re rho23, Im rho23, Re a, Im a].
using ReducedState = Eigen::Matrix<double, 10, 1>;
using Jacobian = Eigen::Matrix<double, 10, 10>;

ReducedState reduce_state(const DensityMatrix3& rho, cplx alpha);
void expand_state(const ReducedState& x, DensityMatrix3& rho, cplx& alpha);
ReducedState reduced_rhs(const ReducedState& x, cplx source, const SystemParams& p);

/// Jacobian of reduced_rhs, differentiated by hand from the equations of motion.
Jacobian analytic_jacobian(const DensityMatrix3& rho, cplx alpha, const SystemParams& p);

Eigen::VectorXcd jacobian_eigenvalues(const DensityMatrix3& rho, cplx alpha, const SystemParams& p);

inline constexpr double kStabilityMargin = 1e-8;

/// Linear stability of a steady branch: stable if every eigenvalue has real
/// part below -kStabilityMargin, unstable if any lies above +kStabilityMargin.
Stability classify_stability(const SteadyBranch& branch, const DriveConfig& drive,
                             const SystemParams& p);

}  // namespace lcpa
