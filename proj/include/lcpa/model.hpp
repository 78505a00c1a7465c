#pragma once

#include <Eigen/Dense>

#include "lcpa/density.hpp"
#include "lcpa/params.hpp"

namespace lcpa {

/// Time derivatives of the mean-field Maxwell-Bloch system: the six atomic
/// equations for rho (lower triangle completed by Hermiticity) and the cavity
/// amplitude equation driven by `source`.
struct StateDerivative {
  Eigen::Matrix3cd drho;
  cplx dalpha;
};

StateDerivative equations_of_motion(const Eigen::Matrix3cd& rho, cplx alpha, cplx source,
                                    const SystemParams& p);

/// Max-norm of the seven steady-state equations (six atomic, one cavity).
double steady_residual(const DensityMatrix3& rho, cplx alpha, cplx source,
                       const SystemParams& p);

/// Same, restricted to the six atomic equations.
double atomic_residual(const DensityMatrix3& rho, cplx alpha, const SystemParams& p);

/// Real packing of rho used by the linear steady-state solve:
/// [rho11, rho22, rho33, Re rho12, Im rho12, Re rho13, Im rho13, Re rho23, Im rho23].
using AtomicVector = Eigen::Matrix<double, 9, 1>;

AtomicVector pack_atomic(const Eigen::Matrix3cd& rho);
Eigen::Matrix3cd unpack_atomic(const AtomicVector& x);

}  // namespace lcpa
