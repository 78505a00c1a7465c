#include "lcpa/model.hpp"

#include <algorithm>
#include <cmath>

namespace lcpa {

namespace {
constexpr cplx I{0.0, 1.0};
}

StateDerivative equations_of_motion(const Eigen::Matrix3cd& rho, cplx alpha, cplx source,
                                    const SystemParams& p) {
  const cplx a = alpha;
  const cplx ac = std::conj(alpha);
  const double G = p.gamma;
  const double g = p.g;
  const double om = p.omega1;

  const cplx r11 = rho(0, 0), r22 = rho(1, 1), r33 = rho(2, 2);
  const cplx r12 = rho(0, 1), r13 = rho(0, 2), r23 = rho(1, 2);
  const cplx r21 = rho(1, 0), r31 = rho(2, 0), r32 = rho(2, 1);

  const cplx d11 = 0.5 * G * r33 + I * g * (ac * r13 - a * r31);
  const cplx d12 = (I * (p.delta_p - p.delta1) - p.gamma12) * r12 - I * g * a * r32 + I * om * r13;
  const cplx d13 = (I * p.delta_p - 0.5 * G) * r13 + I * g * a * (r11 - r33) + I * om * r12;
  const cplx d22 = 0.5 * G * r33 + I * om * (r23 - r32);
  const cplx d23 = (I * p.delta1 - 0.5 * G) * r23 + I * g * a * r21 + I * om * (r22 - r33);
  const cplx d33 = -G * r33 + I * g * (a * r31 - ac * r13) + I * om * (r32 - r23);

  StateDerivative out;
  out.drho << d11, d12, d13,
              std::conj(d12), d22, d23,
              std::conj(d13), std::conj(d23), d33;
  out.dalpha = I * (p.delta_p - p.delta_ac) * a + I * g * p.n_atoms * r13 -
               p.kappa_mean() * a + source;
  return out;
}

double atomic_residual(const DensityMatrix3& rho, cplx alpha, const SystemParams& p) {
  const auto d = equations_of_motion(rho.matrix(), alpha, 0.0, p);
  double r = 0.0;
  for (int m = 0; m < 3; ++m) {
    for (int n = m; n < 3; ++n) r = std::max(r, std::abs(d.drho(m, n)));
  }
  return r;
}

double steady_residual(const DensityMatrix3& rho, cplx alpha, cplx source, const SystemParams& p) {
  const auto d = equations_of_motion(rho.matrix(), alpha, source, p);
  double r = std::abs(d.dalpha);
  for (int m = 0; m < 3; ++m) {
    for (int n = m; n < 3; ++n) r = std::max(r, std::abs(d.drho(m, n)));
  }
  return r;
}

AtomicVector pack_atomic(const Eigen::Matrix3cd& rho) {
  AtomicVector x;
  x << rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
       rho(0, 1).real(), rho(0, 1).imag(),
       rho(0, 2).real(), rho(0, 2).imag(),
       rho(1, 2).real(), rho(1, 2).imag();
  return x;
}

Eigen::Matrix3cd unpack_atomic(const AtomicVector& x) {
  const cplx r12{x[3], x[4]}, r13{x[5], x[6]}, r23{x[7], x[8]};
  Eigen::Matrix3cd m;
  m << x[0], r12, r13,
       std::conj(r12), x[1], r23,
       std::conj(r13), std::conj(r23), x[2];
  return m;
}

}  // namespace lcpa
