#include "lcpa/bloch.hpp"

#include <cmath>
#include <sstream>

#include "lcpa/model.hpp"

namespace lcpa {

namespace {

using Matrix9 = Eigen::Matrix<double, 9, 9>;

// Column k is the atomic derivative of the k-th real basis state; the
// equations carry no inhomogeneous term, so this is the full linear map.
Matrix9 atomic_generator(cplx alpha, const SystemParams& p) {
  Matrix9 m;
  for (int k = 0; k < 9; ++k) {
    AtomicVector e = AtomicVector::Zero();
    e[k] = 1.0;
    const auto d = equations_of_motion(unpack_atomic(e), alpha, 0.0, p);
    m.col(k) = pack_atomic(d.drho);
  }
  return m;
}

}  // namespace

DensityMatrix3 steady_density(cplx alpha, const SystemParams& p, double& rcond) {
  Matrix9 m = atomic_generator(alpha, p);
  m.row(2).setZero();
  m(2, 0) = m(2, 1) = m(2, 2) = 1.0;
  AtomicVector b = AtomicVector::Zero();
  b[2] = 1.0;

  Eigen::PartialPivLU<Matrix9> lu(m);
  rcond = lu.rcond();
  if (!(rcond > kDegenerateRcond)) {
    std::ostringstream msg;
    msg << "degenerate atomic steady state at alpha=(" << alpha.real() << "," << alpha.imag()
        << "), omega1=" << p.omega1 << ", gamma12=" << p.gamma12 << ", delta_p=" << p.delta_p
        << ", delta1=" << p.delta1 << " (rcond " << rcond << ")";
    throw DegenerateStateError(msg.str(), rcond);
  }
  AtomicVector x = lu.solve(b);
  // one refinement step
  x += lu.solve(AtomicVector(b - m * x));
  return DensityMatrix3(unpack_atomic(x));
}

DensityMatrix3 steady_density(cplx alpha, const SystemParams& p) {
  double rcond = 0.0;
  return steady_density(alpha, p, rcond);
}

AtomicResponse effective_response(double i_c, const SystemParams& p) {
  if (!(i_c > 0)) throw std::invalid_argument("effective_response: i_c must be positive");
  const double a = std::sqrt(i_c);
  const auto rho = steady_density(cplx{a, 0.0}, p);
  const cplx chi = cplx{0.0, -1.0} * p.g * p.n_atoms * rho(1, 3) / a;
  return {i_c, chi};
}

cplx linear_response(const SystemParams& p) {
  constexpr cplx I{0.0, 1.0};
  const cplx ground = I * (p.delta_p - p.delta1) - p.gamma12;
  const cplx optical = I * p.delta_p - 0.5 * p.gamma;
  return -p.collective_g2() * ground / (optical * ground + p.omega1 * p.omega1);
}

cplx response_or_linear(double i_c, const SystemParams& p) {
  return i_c > 0 ? effective_response(i_c, p).chi : linear_response(p);
}

}  // namespace lcpa
