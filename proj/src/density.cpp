#include "lcpa/density.hpp"

#include <cmath>
#include <sstream>

namespace lcpa {

DensityMatrix3 DensityMatrix3::from_parts(double p11, double p22, double p33, cplx r12, cplx r13,
                                          cplx r23) {
  Eigen::Matrix3cd m;
  m << p11, r12, r13,
       std::conj(r12), p22, r23,
       std::conj(r13), std::conj(r23), p33;
  return DensityMatrix3(m);
}

std::optional<std::string> DensityMatrix3::check(double herm_tol, double trace_tol,
                                                 double pop_tol) const {
  std::ostringstream msg;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      if (std::abs(rho_(m, n) - std::conj(rho_(n, m))) > herm_tol) {
        msg << "not Hermitian at (" << m + 1 << "," << n + 1 << ")";
        return msg.str();
      }
    }
  }
  if (std::abs(rho_.trace() - 1.0) > trace_tol) {
    msg << "trace " << rho_.trace().real() << " != 1";
    return msg.str();
  }
  for (int m = 0; m < 3; ++m) {
    const double p = rho_(m, m).real();
    if (std::abs(rho_(m, m).imag()) > pop_tol || p < -pop_tol || p > 1.0 + pop_tol) {
      msg << "population " << m + 1 << " out of [0,1]: " << p;
      return msg.str();
    }
  }
  for (int m = 0; m < 3; ++m) {
    for (int n = m + 1; n < 3; ++n) {
      const double bound = rho_(m, m).real() * rho_(n, n).real() + pop_tol;
      if (std::norm(rho_(m, n)) > bound) {
        msg << "coherence (" << m + 1 << "," << n + 1 << ") exceeds population bound";
        return msg.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace lcpa
