#include "lcpa/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lcpa/model.hpp"

namespace lcpa {

namespace {

constexpr cplx I{0.0, 1.0};

struct Stage {
  Eigen::Matrix3cd rho;
  cplx alpha;
};

Stage rhs(const Stage& s, cplx source, const SystemParams& p) {
  const auto d = equations_of_motion(s.rho, s.alpha, source, p);
  return {d.drho, d.dalpha};
}

Stage axpy(const Stage& x, double h, const Stage& k) {
  return {x.rho + h * k.rho, x.alpha + h * k.alpha};
}

double max_norm(const Stage& d) {
  return std::max(d.rho.cwiseAbs().maxCoeff(), std::abs(d.alpha));
}

bool finite(const Stage& s) {
  return s.rho.allFinite() && std::isfinite(s.alpha.real()) && std::isfinite(s.alpha.imag());
}

Stage rk4_step(const Stage& x, double h, cplx source, const SystemParams& p) {
  const Stage k1 = rhs(x, source, p);
  const Stage k2 = rhs(axpy(x, 0.5 * h, k1), source, p);
  const Stage k3 = rhs(axpy(x, 0.5 * h, k2), source, p);
  const Stage k4 = rhs(axpy(x, h, k3), source, p);
  Stage out = x;
  out.rho += (h / 6.0) * (k1.rho + 2.0 * k2.rho + 2.0 * k3.rho + k4.rho);
  out.alpha += (h / 6.0) * (k1.alpha + 2.0 * k2.alpha + 2.0 * k3.alpha + k4.alpha);
  // re-impose exact Hermiticity; RK4 preserves it only up to roundoff
  out.rho = 0.5 * (out.rho + out.rho.adjoint()).eval();
  return out;
}

}  // namespace

double derivative_norm(const SystemState& s, const DriveConfig& drive, const SystemParams& p) {
  return max_norm(rhs({s.rho.matrix(), s.alpha}, drive.source(p), p));
}

Trajectory time_evolve(const SystemState& initial, const DriveConfig& drive,
                       const SystemParams& p, double horizon, double tol,
                       const IntegratorOptions& opt) {
  if (!(horizon > 0)) throw std::invalid_argument("time_evolve: horizon must be positive");
  if (!(tol > 0)) throw std::invalid_argument("time_evolve: tol must be positive");
  if (!(opt.dt > 0)) throw std::invalid_argument("time_evolve: dt must be positive");

  const cplx source = drive.source(p);
  const double trace0 = initial.rho.trace();
  Trajectory traj;
  traj.states.push_back(initial);

  Stage x{initial.rho.matrix(), initial.alpha};
  double t = initial.time;
  const double t_end = initial.time + horizon;
  double h = opt.dt;

  auto snapshot = [&] { return SystemState{DensityMatrix3(x.rho), x.alpha, t}; };

  while (true) {
    const double dnorm = max_norm(rhs(x, source, p));
    traj.derivative_norm = dnorm;
    if (dnorm < tol) {
      traj.converged = true;
      break;
    }
    if (t >= t_end - 1e-12 * std::max(1.0, std::abs(t_end))) break;

    const double step = std::min(h, t_end - t);
    Stage next = rk4_step(x, step, source, p);
    const double drift = std::abs(next.rho.trace().real() - trace0);
    if (!finite(next) || drift > opt.max_trace_drift) {
      h *= 0.5;
      if (h < opt.min_dt) {
        std::ostringstream msg;
        msg << "time_evolve: step size underflow at t=" << t << " (trace drift " << drift << ")";
        throw IntegrationError(msg.str(), snapshot());
      }
      continue;
    }
    x = std::move(next);
    t += step;
    ++traj.steps;
    if (opt.record_every > 0 && traj.steps % opt.record_every == 0) traj.states.push_back(snapshot());
  }
  if (traj.states.size() == 1 || traj.states.back().time != t) traj.states.push_back(snapshot());
  return traj;
}

ReducedState reduce_state(const DensityMatrix3& rho, cplx alpha) {
  ReducedState x;
  x << rho.population(1), rho.population(2),
       rho(1, 2).real(), rho(1, 2).imag(),
       rho(1, 3).real(), rho(1, 3).imag(),
       rho(2, 3).real(), rho(2, 3).imag(),
       alpha.real(), alpha.imag();
  return x;
}

void expand_state(const ReducedState& x, DensityMatrix3& rho, cplx& alpha) {
  rho = DensityMatrix3::from_parts(x[0], x[1], 1.0 - x[0] - x[1], {x[2], x[3]}, {x[4], x[5]},
                                   {x[6], x[7]});
  alpha = {x[8], x[9]};
}

ReducedState reduced_rhs(const ReducedState& x, cplx source, const SystemParams& p) {
  DensityMatrix3 rho;
  cplx alpha;
  expand_state(x, rho, alpha);
  const auto d = equations_of_motion(rho.matrix(), alpha, source, p);
  ReducedState out;
  out << d.drho(0, 0).real(), d.drho(1, 1).real(),
         d.drho(0, 1).real(), d.drho(0, 1).imag(),
         d.drho(0, 2).real(), d.drho(0, 2).imag(),
         d.drho(1, 2).real(), d.drho(1, 2).imag(),
         d.dalpha.real(), d.dalpha.imag();
  return out;
}

Jacobian analytic_jacobian(const DensityMatrix3& rho, cplx alpha, const SystemParams& p) {
  // Column blocks of the reduced coordinates.
  enum : int { P1 = 0, P2 = 1, R12 = 2, R13 = 4, R23 = 6, A = 8 };
  Jacobian J = Jacobian::Zero();

  // f depends on w = u + iv through (w, conj w): df/du = fw + fwb, df/dv = i (fw - fwb).
  auto wrt_complex = [&J](int row, bool complex_row, int col, cplx fw, cplx fwb) {
    const cplx du = fw + fwb;
    const cplx dv = I * (fw - fwb);
    J(row, col) += du.real();
    J(row, col + 1) += dv.real();
    if (complex_row) {
      J(row + 1, col) += du.imag();
      J(row + 1, col + 1) += dv.imag();
    }
  };
  auto wrt_real = [&J](int row, bool complex_row, int col, cplx d) {
    J(row, col) += d.real();
    if (complex_row) J(row + 1, col) += d.imag();
  };

  const double G = p.gamma, g = p.g, om = p.omega1;
  const cplx a = alpha, ac = std::conj(alpha);
  const cplx r12 = rho(1, 2), r13 = rho(1, 3), r23 = rho(2, 3);
  const double p1 = rho.population(1), p2 = rho.population(2);

  // rho11 (real row 0)
  wrt_real(0, false, P1, -0.5 * G);
  wrt_real(0, false, P2, -0.5 * G);
  wrt_complex(0, false, R13, I * g * ac, -I * g * a);
  wrt_complex(0, false, A, -I * g * std::conj(r13), I * g * r13);

  // rho22 (real row 1)
  wrt_real(1, false, P1, -0.5 * G);
  wrt_real(1, false, P2, -0.5 * G);
  wrt_complex(1, false, R23, I * om, -I * om);

  // rho12 (rows 2, 3)
  wrt_complex(2, true, R12, I * (p.delta_p - p.delta1) - p.gamma12, 0.0);
  wrt_complex(2, true, R23, 0.0, -I * g * a);
  wrt_complex(2, true, R13, I * om, 0.0);
  wrt_complex(2, true, A, -I * g * std::conj(r23), 0.0);

  // rho13 (rows 4, 5); rho11 - rho33 = 2 p1 + p2 - 1
  wrt_complex(4, true, R13, I * p.delta_p - 0.5 * G, 0.0);
  wrt_real(4, true, P1, 2.0 * I * g * a);
  wrt_real(4, true, P2, I * g * a);
  wrt_complex(4, true, R12, I * om, 0.0);
  wrt_complex(4, true, A, I * g * (2.0 * p1 + p2 - 1.0), 0.0);

  // rho23 (rows 6, 7); rho22 - rho33 = p1 + 2 p2 - 1
  wrt_complex(6, true, R23, I * p.delta1 - 0.5 * G, 0.0);
  wrt_complex(6, true, R12, 0.0, I * g * a);
  wrt_real(6, true, P1, I * om);
  wrt_real(6, true, P2, 2.0 * I * om);
  wrt_complex(6, true, A, I * g * std::conj(r12), 0.0);

  // cavity field (rows 8, 9)
  wrt_complex(8, true, A, I * (p.delta_p - p.delta_ac) - p.kappa_mean(), 0.0);
  wrt_complex(8, true, R13, I * g * p.n_atoms, 0.0);
  return J;
}

Eigen::VectorXcd jacobian_eigenvalues(const DensityMatrix3& rho, cplx alpha,
                                      const SystemParams& p) {
  Eigen::EigenSolver<Jacobian> es(analytic_jacobian(rho, alpha, p), false);
  return es.eigenvalues();
}

Stability classify_stability(const SteadyBranch& branch, const DriveConfig&,
                             const SystemParams& p) {
  const auto ev = jacobian_eigenvalues(branch.rho, branch.alpha, p);
  const double abscissa = ev.real().maxCoeff();
  if (abscissa > kStabilityMargin) return Stability::unstable;
  if (abscissa < -kStabilityMargin) return Stability::stable;
  return Stability::unknown;
}

}  // namespace lcpa
