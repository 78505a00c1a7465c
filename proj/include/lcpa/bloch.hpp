#pragma once

#include <stdexcept>
#include <string>

#include "lcpa/density.hpp"
#include "lcpa/params.hpp"

namespace lcpa {

/// The atomic steady-state linear system is numerically singular at this point.
class DegenerateStateError : public std::runtime_error {
 public:
  DegenerateStateError(const std::string& what, double rcond)
      : std::runtime_error(what), rcond_(rcond) {}
  double rcond() const { return rcond_; }

 private:
  double rcond_;
};

/// Reciprocal condition estimate below which the steady solve is rejected.
inline constexpr double kDegenerateRcond = 1e-14;

/// Stationary rho for a fixed cavity amplitude. The atomic equations are linear
/// in the nine real components of rho once alpha is fixed; the rho33 equation
/// is replaced by the trace condition.
DensityMatrix3 steady_density(cplx alpha, const SystemParams& p);

/// Same, also reporting the reciprocal condition estimate of the solve.
DensityMatrix3 steady_density(cplx alpha, const SystemParams& p, double& rcond);

struct AtomicResponse {
  double i_c;
  cplx chi;  // -i g N rho13 / alpha with alpha = sqrt(i_c)
};

/// Nonlinear medium response entering the cavity equation. Requires i_c > 0.
AtomicResponse effective_response(double i_c, const SystemParams& p);

/// Weak-probe limit of effective_response (rho11 = 1).
cplx linear_response(const SystemParams& p);

/// Response at i_c, falling back to linear_response for i_c == 0.
cplx response_or_linear(double i_c, const SystemParams& p);

}  // namespace lcpa
