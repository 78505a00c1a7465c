#include "lcpa/params.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace lcpa {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ValidationError(field, what);
}

void require_finite(const SystemParams& p) {
  const std::pair<double, const char*> fields[] = {
      {p.gamma, "gamma"},   {p.gamma12, "gamma12"}, {p.kappa_l, "kappa_l"},  {p.kappa_r, "kappa_r"},
      {p.tau, "tau"},       {p.g, "g"},             {p.n_atoms, "n_atoms"},  {p.omega1, "omega1"},
      {p.delta_p, "delta_p"}, {p.delta_ac, "delta_ac"}, {p.delta1, "delta1"}};
  for (const auto& [v, name] : fields) require(std::isfinite(v), name, "must be finite");
}

}  // namespace

SystemParams validate_params(const SystemParams& raw) {
  require(std::isfinite(raw.gamma) && raw.gamma > 0, "gamma", "must be positive");
  require(raw.gamma12 >= 0, "gamma12", "must be nonnegative");
  require(raw.kappa_l > 0, "kappa_l", "must be positive");
  require(raw.kappa_r > 0, "kappa_r", "must be positive");
  require(raw.tau > 0, "tau", "must be positive");
  require(raw.g >= 0, "g", "must be nonnegative");
  require(raw.n_atoms >= 0, "n_atoms", "must be nonnegative");
  require(raw.omega1 >= 0, "omega1", "must be nonnegative");
  require_finite(raw);

  const double s = raw.gamma;
  SystemParams p = raw;
  p.gamma = 1.0;
  p.gamma12 /= s;
  p.kappa_l /= s;
  p.kappa_r /= s;
  p.tau *= s;
  p.g /= s;
  p.omega1 /= s;
  p.delta_p /= s;
  p.delta_ac /= s;
  p.delta1 /= s;
  return p;
}

SystemParams default_params() { return SystemParams{}; }

SystemParams with_atom_number(SystemParams p, double n) {
  if (!(n > 0)) throw ValidationError("n_atoms", "must be positive for a g-N split");
  const double g2n = p.collective_g2();
  p.n_atoms = n;
  p.g = std::sqrt(g2n / n);
  return p;
}

double reduce_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phase, two_pi);
  if (r < 0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

DriveConfig::DriveConfig(double amp_in, double phase)
    : amp_in_(amp_in), phase_(reduce_phase(phase)) {
  if (!(amp_in >= 0) || !std::isfinite(amp_in)) {
    throw ValidationError("amp_in", "must be finite and nonnegative");
  }
}

DriveConfig DriveConfig::from_intensity(double i_in, double phase) {
  if (!(i_in >= 0)) throw ValidationError("i_in", "must be nonnegative");
  return DriveConfig(std::sqrt(i_in), phase);
}

cplx DriveConfig::in_left() const { return std::polar(amp_in_, phase_); }
cplx DriveConfig::in_right() const { return {amp_in_, 0.0}; }

cplx DriveConfig::source(const SystemParams& p) const {
  return std::sqrt(p.kappa_l / p.tau) * in_left() + std::sqrt(p.kappa_r / p.tau) * in_right();
}

double source_gain(double phase, const SystemParams& p) {
  return std::norm(std::sqrt(p.kappa_l / p.tau) * std::polar(1.0, phase) +
                   std::sqrt(p.kappa_r / p.tau));
}

}  // namespace lcpa
