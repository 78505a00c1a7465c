#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lcpa/cavity.hpp"
#include "lcpa/params.hpp"
#include "lcpa/turning_points.hpp"

namespace lcpa {

/// Operating point where both outputs vanish for phase 0.
struct CpaPoint {
  double delta_p = 0.0;
  double delta_ac = 0.0;
  double i_c = 0.0;
  double i_in = 0.0;
  bool multistable = false;
  std::vector<double> other_roots;  // further I_c solving Re chi = kappa, ascending
};

class NoCpaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoHighBranchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G(i_c) - 2 kappa for the symmetric cavity; zero exactly at CPA.
cplx cpa_residual(double i_c, const SystemParams& p);

/// All I_c with Re chi(I_c) = kappa at the given probe detuning, ascending.
/// The delta_ac field of p is irrelevant here.
std::vector<double> absorption_matching_roots(double delta_p, const SystemParams& p);

/// Solves Re G = 2 kappa and Im G = 0 for (I_c, delta_ac), returning the
/// smallest-I_c solution. Throws NoCpaError when no I_c matches.
CpaPoint find_cpa_point(double delta_p, const SystemParams& p);

/// Same, without the transfer-curve sweep that sets `multistable`.
CpaPoint find_cpa_point_fast(double delta_p, const SystemParams& p);

bool cpa_exists(double delta_p, const SystemParams& p);

struct CpaWindowOptions {
  double scan_min = -15.0;
  double scan_max = 15.0;
  double step = 0.05;
  double edge_tolerance = 0.02;
  Execution exec = Execution::parallel;
};

struct CpaWindow {
  bool found = false;  // false: CPA nowhere in the scanned range
  double lower = 0.0;
  double upper = 0.0;
  /// Detuning intervals strictly inside (lower, upper) without CPA, e.g. the
  /// transparency hole around two-photon resonance.
  std::vector<std::pair<double, double>> gaps;
  bool truncated = false;  // an edge coincides with the scan boundary
};

/// Outermost probe-detuning interval on which CPA exists.
CpaWindow cpa_window(const SystemParams& p, const CpaWindowOptions& opt = {});

/// Existence flags on the scan grid, in grid order (exposed for testing the
/// serial and OpenMP paths against each other).
std::vector<char> cpa_existence_scan(const std::vector<double>& delta_p, const SystemParams& p,
                                     Execution exec);

struct RatioResult {
  double ratio = 0.0;    // I_out / I_in on the high-output branch (both sides equal)
  double i_in = 0.0;     // the CPA input intensity
  double delta_ac = 0.0;
  double i_c_cpa = 0.0;
  double i_c_high = 0.0;
  std::size_t n_branches = 0;
};

/// Output-input ratio of the stable high-output branch coexisting with the CPA
/// branch at the CPA input intensity. Throws NoHighBranchError when the CPA
/// point is monostable.
RatioResult high_low_ratio(double delta_p, const SystemParams& p);

/// Bistable region of the phase-0 transfer curve at a CPA point.
TurningPoints cpa_turning_points(const CpaPoint& cpa, const SystemParams& p);

/// Observed bistable interval for a given control Rabi frequency.
struct RegionTarget {
  double omega1;
  double i_in_lower;
  double i_in_upper;
};

struct AtomNumberFit {
  double n_atoms = 1.0;
  double g = 0.0;
  double rms_log_error = 0.0;
  std::vector<BistableRegion> regions;  // at the fitted split
};

/// Least-squares fit (in log I_in) of the atom number N at fixed g sqrt(N)
/// so that the CPA-point bistable regions at delta_p match the targets.
/// Input intensities scale exactly linearly with N at fixed g^2 N.
AtomNumberFit fit_atom_number(const SystemParams& base, double delta_p,
                              const std::vector<RegionTarget>& targets);

}  // namespace lcpa
