#pragma once
// Independent reference computations used only by the tests. None of these
// call into the library's solvers; they rebuild the physics from scratch.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "lcpa/dynamics.hpp"
#include "lcpa/params.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Closed two-level saturation (|1>, |3> only, full decay back to |1>), probe
// detuning dp, real alpha.
struct TwoLevel {
  double rho11, rho33;
  cplx rho13;
};

inline TwoLevel two_level(double alpha, double dp, double gamma, double g) {
  const double h = 0.5 * gamma;
  const double l = g * g * alpha * alpha / (h * h + dp * dp);
  TwoLevel t;
  t.rho33 = l / (1.0 + 2.0 * l);
  t.rho11 = 1.0 - t.rho33;
  t.rho13 = cplx{0.0, 1.0} * g * alpha * (1.0 - 2.0 * t.rho33) / cplx{h, -dp};
  return t;
}

// Steady state of the three-level Liouvillian assembled from the Hamiltonian
// and collapse operators (plus phenomenological ground-coherence damping),
// solved on the 9-dim complex vectorization with a full-pivot LU.
inline Eigen::Matrix3cd liouvillian_steady_state(cplx alpha, const lcpa::SystemParams& p) {
  using M3 = Eigen::Matrix3cd;
  const cplx i{0.0, 1.0};
  M3 h = M3::Zero();
  h(1, 1) = p.delta_p - p.delta1;
  h(2, 2) = p.delta_p;
  h(0, 2) = p.g * alpha;
  h(2, 0) = p.g * std::conj(alpha);
  h(1, 2) = p.omega1;
  h(2, 1) = p.omega1;

  std::vector<M3> jumps;
  for (int target : {0, 1}) {
    M3 l = M3::Zero();
    l(target, 2) = std::sqrt(0.5 * p.gamma);
    jumps.push_back(l);
  }

  // Column-major vec: vec(A X B) = (B^T kron A) vec(X).
  auto kron = [](const M3& a, const M3& b) {
    Eigen::Matrix<cplx, 9, 9> k;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) k.block<3, 3>(3 * r, 3 * c) = a(r, c) * b;
    return k;
  };
  const M3 id = M3::Identity();
  Eigen::Matrix<cplx, 9, 9> lv = -i * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& l : jumps) {
    const M3 ldl = l.adjoint() * l;
    lv += kron(l.conjugate(), l) - 0.5 * kron(id, ldl) - 0.5 * kron(ldl.transpose(), id);
  }
  // rho12 / rho21 damping; index of (m, n) in column-major vec is m + 3n.
  lv(0 + 3 * 1, 0 + 3 * 1) -= p.gamma12;
  lv(1 + 3 * 0, 1 + 3 * 0) -= p.gamma12;

  Eigen::Matrix<cplx, 9, 9> a = lv;
  Eigen::Matrix<cplx, 9, 1> b = Eigen::Matrix<cplx, 9, 1>::Zero();
  a.row(8).setZero();
  a(8, 0) = a(8, 4) = a(8, 8) = 1.0;
  b(8) = 1.0;
  const Eigen::Matrix<cplx, 9, 1> v = a.fullPivLu().solve(b);
  M3 rho;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) rho(m, n) = v(m + 3 * n);
  return rho;
}

inline cplx liouvillian_chi(double i_c, const lcpa::SystemParams& p) {
  const cplx alpha{std::sqrt(i_c), 0.0};
  const auto rho = liouvillian_steady_state(alpha, p);
  return -cplx{0.0, 1.0} * p.g * p.n_atoms * rho(0, 2) / alpha;
}

// Brute-force CPA existence: dense log scan in I_c for a sign change of
// Re chi - kappa.
inline bool cpa_exists_bruteforce(double delta_p, lcpa::SystemParams p, int per_decade = 40) {
  p.delta_p = delta_p;
  const double scale = 1.0 / (p.g * p.g);
  double prev = 0.0;
  const int n = 17 * per_decade;
  for (int k = 0; k <= n; ++k) {
    const double i_c = scale * std::pow(10.0, -8.0 + 17.0 * k / n);
    const double f = liouvillian_chi(i_c, p).real() - p.kappa_mean();
    if (k > 0 && (f < 0) != (prev < 0)) return true;
    prev = f;
  }
  return false;
}

// Central-difference Jacobian of the reduced right-hand side.
inline lcpa::Jacobian fd_jacobian(const lcpa::ReducedState& x, cplx source, const lcpa::SystemParams& p,
                                  double h = 1e-6) {
  lcpa::Jacobian j;
  for (int c = 0; c < 10; ++c) {
    lcpa::ReducedState xp = x, xm = x;
    const double step = h * std::max(1.0, std::abs(x[c]));
    xp[c] += step;
    xm[c] -= step;
    j.col(c) = (lcpa::reduced_rhs(xp, source, p) - lcpa::reduced_rhs(xm, source, p)) / (2.0 * step);
  }
  return j;
}

}  // namespace oracle
