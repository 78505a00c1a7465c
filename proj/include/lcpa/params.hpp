#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace lcpa {

using cplx = std::complex<double>;

/// Rates and detunings of the atom-cavity model. After validation every rate
/// is expressed in units of the excited-state decay rate (gamma == 1).
struct SystemParams {
  double gamma = 1.0;      // decay rate of |3>
  double gamma12 = 0.001;  // ground-state decoherence
  double kappa_l = 1.0;
  double kappa_r = 1.0;
  double tau = 0.01;       // photon round-trip time, units of 1/gamma
  double g = 10.0;         // single-atom coupling
  double n_atoms = 1.0;
  double omega1 = 1.0;     // control Rabi frequency
  double delta_p = 0.0;
  double delta_ac = 0.0;
  double delta1 = 0.0;

  double kappa_mean() const { return 0.5 * (kappa_l + kappa_r); }
  bool symmetric() const { return kappa_l == kappa_r; }
  /// Collective coupling squared, g^2 N.
  double collective_g2() const { return g * g * n_atoms; }

  bool operator==(const SystemParams&) const = default;
};

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Checks signs and rescales every rate so that gamma == 1.
/// Throws ValidationError naming the offending field.
SystemParams validate_params(const SystemParams& raw);

/// Reference parameter point (kappa = Omega1 = Gamma, g sqrt(N) = 10 Gamma,
/// tau = 0.01/Gamma, gamma12 = 0.001 Gamma) with the N = 1, g = 10 split.
SystemParams default_params();

/// Replaces (g, N) by (sqrt(g^2 N / n), n), keeping the collective coupling.
SystemParams with_atom_number(SystemParams p, double n);

/// Two counterpropagating probes: a_in,l = amp e^{i phase}, a_in,r = amp.
class DriveConfig {
 public:
  DriveConfig() = default;
  DriveConfig(double amp_in, double phase);

  static DriveConfig from_intensity(double i_in, double phase);

  double amp_in() const { return amp_in_; }
  double phase() const { return phase_; }
  double intensity() const { return amp_in_ * amp_in_; }
  cplx in_left() const;
  cplx in_right() const;
  /// Cavity source term sqrt(kl/tau) a_in,l + sqrt(kr/tau) a_in,r.
  cplx source(const SystemParams& p) const;

 private:
  double amp_in_ = 0.0;
  double phase_ = 0.0;
};

/// Phase reduced to [0, 2pi).
double reduce_phase(double phase);

/// |sqrt(kl/tau) e^{i phase} + sqrt(kr/tau)|^2, the factor mapping I_in onto |S|^2.
double source_gain(double phase, const SystemParams& p);

}  // namespace lcpa
