#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcpa/params.hpp"

namespace lcpa {

// Closed-form approximate steady state of the intracavity field for a resonant
// control laser (delta1 = 0), transcribed term by term. Neglects higher orders
// of alpha; used only as a consistency reference for the exact solver.

struct ApproxConstants {
  cplx x_const;    // kappa - i(delta_p - delta_ac)
  cplx a_const;    // Gamma (delta_p + i gamma12)
  double b_const;  // Gamma^2 (gamma12^2 + delta_p^2) + 4 Gamma gamma12 Omega1^2
  double c_const;
};

class ApproxDivisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

ApproxConstants approx_constants(const SystemParams& p);

/// The nonlinear fraction F(alpha) subtracted from X in the denominator.
cplx approx_fraction(cplx alpha, const SystemParams& p);

/// Denominator of F(alpha); strictly positive for omega1 > 0.
double approx_denominator(double i_c, const SystemParams& p);

/// alpha (X - F(alpha)) - S; zero when alpha solves the approximate cubic.
cplx approx_residual(cplx alpha, const DriveConfig& drive, const SystemParams& p);

struct DeviationRow {
  double i_c;
  double i_in_exact;
  double i_in_approx;  // NaN when the approximate relation has no solution at this |alpha|
  double rel_deviation;
  std::optional<std::string> error;
};

/// Compares, at phase 0, the input intensity the approximate relation needs
/// to sustain each |alpha|^2 against the exact solver's requirement.
std::vector<DeviationRow> deviation_report(const SystemParams& p, const std::vector<double>& i_c_grid);

}  // namespace lcpa
