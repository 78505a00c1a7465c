#include "lcpa/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "lcpa/bloch.hpp"
#include "lcpa/dynamics.hpp"
#include "lcpa/turning_points.hpp"

namespace lcpa {

const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::unknown: break;
  }
  return "unknown";
}

cplx total_response(double i_c, const SystemParams& p) {
  const cplx chi = p.collective_g2() == 0.0 ? cplx{} : response_or_linear(i_c, p);
  return p.kappa_mean() - cplx{0.0, 1.0} * (p.delta_p - p.delta_ac) + chi;
}

bool is_undriven_phase(double phase, const SystemParams& p) {
  const double full = std::pow(std::sqrt(p.kappa_l / p.tau) + std::sqrt(p.kappa_r / p.tau), 2);
  return source_gain(phase, p) <= 1e-12 * full;
}

double required_input_intensity(double i_c, double phase, const SystemParams& p) {
  if (is_undriven_phase(phase, p)) {
    throw UndrivenCavityError(
        "required_input_intensity: drives cancel (phase = pi); alpha != 0 needs a lasing pole "
        "G = 0");
  }
  if (i_c == 0.0) return 0.0;
  return i_c * std::norm(total_response(i_c, p)) / source_gain(phase, p);
}

OutputFields output_fields(cplx alpha, const DriveConfig& drive, const SystemParams& p) {
  return {std::sqrt(p.kappa_l * p.tau) * alpha - drive.in_left(),
          std::sqrt(p.kappa_r * p.tau) * alpha - drive.in_right()};
}

TransferSample transfer_sample(double i_c, double phase, const SystemParams& p) {
  const cplx g_total = total_response(i_c, p);
  const double i_in = i_c * std::norm(g_total) / source_gain(phase, p);
  const auto drive = DriveConfig::from_intensity(i_in, phase);
  const cplx alpha = drive.source(p) / g_total;
  const auto out = output_fields(alpha, drive, p);
  return {i_c, i_in, std::norm(out.left), std::norm(out.right), alpha, g_total};
}

std::vector<TransferSample> transfer_samples(const std::vector<double>& grid, double phase,
                                             const SystemParams& p, Execution exec) {
  std::vector<TransferSample> out(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = transfer_sample(grid[i], phase, p);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = transfer_sample(grid[i], phase, p);
    } catch (...) {
#pragma omp critical(lcpa_transfer_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

TransferCurve sweep_transfer_curve(const SystemParams& p, double phase, const SweepOptions& opt) {
  if (!(opt.i_c_max > opt.i_c_min) || !(opt.i_c_min > 0)) {
    throw std::invalid_argument("sweep_transfer_curve: need 0 < i_c_min < i_c_max");
  }
  if (opt.n_samples < 2) throw std::invalid_argument("sweep_transfer_curve: n_samples >= 2");
  if (is_undriven_phase(phase, p)) {
    throw UndrivenCavityError("sweep_transfer_curve: phase = pi leaves the cavity undriven");
  }

  std::vector<double> grid(opt.n_samples);
  const double l0 = std::log(opt.i_c_min), l1 = std::log(opt.i_c_max);
  for (std::size_t i = 0; i < opt.n_samples; ++i) {
    grid[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / (opt.n_samples - 1));
  }
  grid.front() = opt.i_c_min;
  grid.back() = opt.i_c_max;

  TransferCurve curve;
  curve.phase = reduce_phase(phase);
  curve.params = p;
  curve.samples = transfer_samples(grid, phase, p, opt.exec);

  constexpr std::size_t kMaxSamples = 400000;
  for (int pass = 0; pass < opt.max_refine_passes; ++pass) {
    std::vector<double> mids;
    const auto& s = curve.samples;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i].i_in > 0 && s[i + 1].i_in > 0 &&
          std::abs(std::log(s[i + 1].i_in / s[i].i_in)) > opt.max_dlog_i_in) {
        const double m = std::sqrt(s[i].i_c * s[i + 1].i_c);
        if (m > s[i].i_c && m < s[i + 1].i_c) mids.push_back(m);
      }
    }
    if (mids.empty() || s.size() + mids.size() > kMaxSamples) break;
    auto added = transfer_samples(mids, phase, p, opt.exec);
    std::vector<TransferSample> merged;
    merged.reserve(s.size() + added.size());
    std::merge(s.begin(), s.end(), added.begin(), added.end(), std::back_inserter(merged),
               [](const TransferSample& a, const TransferSample& b) { return a.i_c < b.i_c; });
    curve.samples = std::move(merged);
  }
  return curve;
}

TransferCurve sweep_transfer_curve(const SystemParams& p, double phase, double i_c_max,
                                   std::size_t n_samples, Execution exec) {
  SweepOptions opt;
  opt.i_c_max = i_c_max;
  opt.n_samples = n_samples;
  opt.exec = exec;
  return sweep_transfer_curve(p, phase, opt);
}

// --- forward solve -----------------------------------------------------------

BranchSolver::BranchSolver(const SystemParams& p, double phase, const SweepOptions& opt)
    : params_(p), phase_(reduce_phase(phase)), undriven_(is_undriven_phase(phase, p)), opt_(opt) {
  if (undriven_) return;
  curve_ = sweep_transfer_curve(p, phase_, opt_);
  const auto tp = find_turning_points(curve_);
  bounds_.push_back(0.0);
  bound_in_.push_back(0.0);
  for (const auto& f : tp.folds) {
    if (f.i_c <= bounds_.back()) continue;
    fold_ic_.push_back(f.i_c);
    bounds_.push_back(f.i_c);
    bound_in_.push_back(f.i_in);
  }
  bounds_.push_back(curve_.samples.back().i_c);
  bound_in_.push_back(curve_.samples.back().i_in);
}

double BranchSolver::input_at(double i_c) const {
  return required_input_intensity(i_c, phase_, params_);
}

double BranchSolver::bisect(double lo, double hi, double target) const {
  double f_lo = input_at(lo) - target;
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    const double f_mid = input_at(mid) - target;
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (hi / lo - 1.0 < 4 * std::numeric_limits<double>::epsilon()) break;
  }
  return std::sqrt(lo * hi);
}

std::vector<double> BranchSolver::intracavity_roots(double i_in) const {
  if (!(i_in >= 0)) throw std::invalid_argument("solve_branches: i_in must be nonnegative");
  if (undriven_ || i_in == 0.0) return {0.0};

  std::vector<double> roots;
  for (std::size_t s = 0; s + 1 < bounds_.size(); ++s) {
    double a = bounds_[s], b = bounds_[s + 1];
    const double fa = bound_in_[s] - i_in, fb = bound_in_[s + 1] - i_in;
    if (fb == 0.0) {
      roots.push_back(b);
      continue;
    }
    if ((fa < 0) == (fb < 0) || fa == 0.0) continue;
    if (a == 0.0) {
      // the first piece starts in the linear regime, where I_in ~ I_c |G(0)|^2 / gain
      const double slope = std::norm(total_response(0.0, params_)) / source_gain(phase_, params_);
      a = std::min(b, i_in / slope) * 1e-3;
      while (input_at(a) >= i_in && a > 1e-300) a *= 1e-3;
    }
    roots.push_back(bisect(a, b, i_in));
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no steady state for i_in=" << i_in << " on (0, " << bounds_.back()
        << "]; brackets:";
    for (std::size_t s = 0; s < bounds_.size(); ++s) {
      msg << " [i_c=" << bounds_[s] << ", i_in=" << bound_in_[s] << "]";
    }
    throw EmptyResultError(msg.str());
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<SteadyBranch> BranchSolver::solve(double i_in) const {
  const auto drive = DriveConfig::from_intensity(i_in, phase_);
  std::vector<SteadyBranch> out;
  for (double ic : intracavity_roots(i_in)) out.push_back(make_branch(ic, drive, params_));
  return out;
}

SteadyBranch make_branch(double i_c, const DriveConfig& drive, const SystemParams& p) {
  SteadyBranch b;
  if (i_c == 0.0) {
    b.alpha = 0.0;
  } else {
    b.alpha = drive.source(p) / total_response(i_c, p);
  }
  b.i_c = std::norm(b.alpha);
  b.rho = steady_density(b.alpha, p);
  const auto out = output_fields(b.alpha, drive, p);
  b.out_l = out.left;
  b.out_r = out.right;
  b.stability = classify_stability(b, drive, p);
  return b;
}

std::vector<SteadyBranch> solve_branches(double i_in, double phase, const SystemParams& p) {
  if (!(i_in >= 0)) throw std::invalid_argument("solve_branches: i_in must be nonnegative");
  if (i_in == 0.0 || is_undriven_phase(phase, p)) {
    return {make_branch(0.0, DriveConfig::from_intensity(i_in, phase), p)};
  }
  return BranchSolver(p, phase).solve(i_in);
}

}  // namespace lcpa
