#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcpa/density.hpp"
#include "lcpa/params.hpp"

namespace lcpa {

/// Kernels that evaluate independent samples take an execution policy; the
/// serial path is the reference the OpenMP path is tested against.
enum class Execution { serial, parallel };

enum class Stability { stable, unstable, unknown };
const char* to_string(Stability s);

/// One self-consistent steady state of atoms plus cavity field.
struct SteadyBranch {
  cplx alpha;
  double i_c = 0.0;
  DensityMatrix3 rho;
  cplx out_l;
  cplx out_r;
  Stability stability = Stability::unknown;
};

struct OutputFields {
  cplx left;
  cplx right;
};

/// Raised for a drive whose cavity source term vanishes (phase = pi).
class UndrivenCavityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No steady intracavity intensity reproduces the requested input.
class EmptyResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G(I_c) = kappa_mean - i(delta_p - delta_ac) + chi(I_c); the steady cavity
/// equation is alpha G(|alpha|^2) = S.
cplx total_response(double i_c, const SystemParams& p);

/// Input intensity that sustains intracavity intensity i_c at relative phase
/// `phase`. Single-valued in i_c, which is what makes the S-curve tractable.
double required_input_intensity(double i_c, double phase, const SystemParams& p);

/// Mirror input-output relations.
OutputFields output_fields(cplx alpha, const DriveConfig& drive, const SystemParams& p);

struct TransferSample {
  double i_c;
  double i_in;
  double i_out_l;
  double i_out_r;
  cplx alpha;
  cplx g_total;
};

struct TransferCurve {
  std::vector<TransferSample> samples;  // ascending i_c
  double phase = 0.0;
  SystemParams params;
};

struct SweepOptions {
  double i_c_min = 1e-6;
  double i_c_max = 1e7;
  std::size_t n_samples = 2000;
  double max_dlog_i_in = 0.05;  // refine where |d ln I_in| exceeds this
  int max_refine_passes = 24;
  Execution exec = Execution::parallel;
};

/// Evaluates one point of the inverse-parametrized transfer curve.
TransferSample transfer_sample(double i_c, double phase, const SystemParams& p);

/// Evaluates all grid points; results are in grid order for both policies.
std::vector<TransferSample> transfer_samples(const std::vector<double>& i_c_grid, double phase,
                                             const SystemParams& p, Execution exec);

/// Log-spaced grid over [i_c_min, i_c_max] with adaptive midpoint insertion.
TransferCurve sweep_transfer_curve(const SystemParams& p, double phase, const SweepOptions& opt);

TransferCurve sweep_transfer_curve(const SystemParams& p, double phase, double i_c_max,
                                   std::size_t n_samples, Execution exec = Execution::parallel);

/// Forward solver for a fixed (params, phase): the transfer curve is split at
/// its folds into monotone pieces, and each piece is searched by bisection.
class BranchSolver {
 public:
  BranchSolver(const SystemParams& p, double phase, const SweepOptions& opt = {});

  /// Ascending intracavity intensities of all steady states at input i_in.
  std::vector<double> intracavity_roots(double i_in) const;

  /// Full branches including density matrix, outputs, and stability labels.
  std::vector<SteadyBranch> solve(double i_in) const;

  const TransferCurve& curve() const { return curve_; }
  /// Intracavity intensities of the refined fold points.
  const std::vector<double>& folds() const { return fold_ic_; }

 private:
  double input_at(double i_c) const;
  double bisect(double lo, double hi, double target) const;

  SystemParams params_;
  double phase_;
  bool undriven_;
  SweepOptions opt_;
  TransferCurve curve_;
  std::vector<double> fold_ic_;
  std::vector<double> bounds_;    // segment boundaries in i_c, starting at 0
  std::vector<double> bound_in_;  // i_in at each boundary
};

/// All steady branches at input intensity i_in, ascending in I_c.
std::vector<SteadyBranch> solve_branches(double i_in, double phase, const SystemParams& p);

/// Completes an intracavity intensity into a branch with its stability label.
SteadyBranch make_branch(double i_c, const DriveConfig& drive, const SystemParams& p);

/// True when the cavity source vanishes for this phase (within tolerance).
bool is_undriven_phase(double phase, const SystemParams& p);

}  // namespace lcpa
