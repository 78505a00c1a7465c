#include "lcpa/cpa.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "lcpa/bloch.hpp"

namespace lcpa {

namespace {

void require_symmetric(const SystemParams& p) {
  if (!p.symmetric()) {
    throw ValidationError("kappa_r", "CPA analysis with equal input amplitudes needs kappa_l == kappa_r");
  }
}

double absorption_mismatch(double i_c, const SystemParams& p) {
  return effective_response(i_c, p).chi.real() - p.kappa_mean();
}

// Grid in the saturation variable g^2 I_c so the scan tracks the g-N split.
constexpr double kScanLogMin = -8.0;
constexpr double kScanLogMax = 9.0;
constexpr int kScanPerDecade = 30;

double bisect_log(double lo, double hi, double f_lo, const SystemParams& p) {
  for (int it = 0; it < 400; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    const double f_mid = absorption_mismatch(mid, p);
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

double edge_between(double inside, double outside, double tol, const SystemParams& p) {
  while (std::abs(outside - inside) > tol) {
    const double mid = 0.5 * (inside + outside);
    if (cpa_exists(mid, p)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return 0.5 * (inside + outside);
}

}  // namespace

cplx cpa_residual(double i_c, const SystemParams& p) {
  return total_response(i_c, p) - 2.0 * p.kappa_mean();
}

std::vector<double> absorption_matching_roots(double delta_p, const SystemParams& base) {
  SystemParams p = base;
  p.delta_p = delta_p;
  if (p.collective_g2() == 0.0 || p.g == 0.0) return {};

  const double scale = 1.0 / (p.g * p.g);
  const int n = static_cast<int>((kScanLogMax - kScanLogMin) * kScanPerDecade) + 1;
  std::vector<double> roots;
  double prev_x = 0.0, prev_f = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = scale * std::pow(10.0, kScanLogMin + (kScanLogMax - kScanLogMin) * i / (n - 1));
    const double f = absorption_mismatch(x, p);
    if (f == 0.0) {
      roots.push_back(x);
    } else if (i > 0 && prev_f != 0.0 && (f < 0) != (prev_f < 0)) {
      roots.push_back(bisect_log(prev_x, x, prev_f, p));
    }
    prev_x = x;
    prev_f = f;
  }
  return roots;
}

CpaPoint find_cpa_point_fast(double delta_p, const SystemParams& base) {
  require_symmetric(base);
  const auto roots = absorption_matching_roots(delta_p, base);
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no CPA at delta_p=" << delta_p << ": Re chi(I_c) never reaches kappa="
        << base.kappa_mean();
    throw NoCpaError(msg.str());
  }
  SystemParams p = base;
  p.delta_p = delta_p;
  CpaPoint cpa;
  cpa.delta_p = delta_p;
  cpa.i_c = roots.front();
  cpa.other_roots.assign(roots.begin() + 1, roots.end());
  cpa.delta_ac = delta_p - effective_response(cpa.i_c, p).chi.imag();
  p.delta_ac = cpa.delta_ac;
  cpa.i_in = required_input_intensity(cpa.i_c, 0.0, p);
  return cpa;
}

TurningPoints cpa_turning_points(const CpaPoint& cpa, const SystemParams& base) {
  SystemParams p = base;
  p.delta_p = cpa.delta_p;
  p.delta_ac = cpa.delta_ac;
  return find_turning_points(sweep_transfer_curve(p, 0.0, SweepOptions{}));
}

CpaPoint find_cpa_point(double delta_p, const SystemParams& p) {
  CpaPoint cpa = find_cpa_point_fast(delta_p, p);
  cpa.multistable = !cpa_turning_points(cpa, p).regions.empty();
  return cpa;
}

bool cpa_exists(double delta_p, const SystemParams& p) {
  return !absorption_matching_roots(delta_p, p).empty();
}

std::vector<char> cpa_existence_scan(const std::vector<double>& delta_p, const SystemParams& p,
                                     Execution exec) {
  std::vector<char> out(delta_p.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(delta_p.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = cpa_exists(delta_p[i], p);
    return out;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = cpa_exists(delta_p[i], p);
    } catch (...) {
#pragma omp critical(lcpa_cpa_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

CpaWindow cpa_window(const SystemParams& p, const CpaWindowOptions& opt) {
  require_symmetric(p);
  if (!(opt.scan_max > opt.scan_min) || !(opt.step > 0)) {
    throw std::invalid_argument("cpa_window: bad scan range");
  }
  const auto n = static_cast<std::size_t>(std::llround((opt.scan_max - opt.scan_min) / opt.step)) + 1;
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = opt.scan_min + opt.step * static_cast<double>(i);

  const auto exists = cpa_existence_scan(grid, p, opt.exec);
  CpaWindow w;
  const auto first = std::find(exists.begin(), exists.end(), 1);
  if (first == exists.end()) return w;
  const auto last = std::find(exists.rbegin(), exists.rend(), 1);
  const std::size_t i0 = static_cast<std::size_t>(first - exists.begin());
  const std::size_t i1 = n - 1 - static_cast<std::size_t>(last - exists.rbegin());

  w.found = true;
  w.truncated = i0 == 0 || i1 == n - 1;
  w.lower = i0 == 0 ? grid[0] : edge_between(grid[i0], grid[i0 - 1], opt.edge_tolerance, p);
  w.upper = i1 == n - 1 ? grid[n - 1] : edge_between(grid[i1], grid[i1 + 1], opt.edge_tolerance, p);

  for (std::size_t i = i0; i < i1; ++i) {
    if (exists[i] && !exists[i + 1]) {
      std::size_t j = i + 1;
      while (!exists[j]) ++j;
      w.gaps.emplace_back(edge_between(grid[i], grid[i + 1], opt.edge_tolerance, p),
                          edge_between(grid[j], grid[j - 1], opt.edge_tolerance, p));
      i = j - 1;
    }
  }
  return w;
}

RatioResult high_low_ratio(double delta_p, const SystemParams& base) {
  const CpaPoint cpa = find_cpa_point_fast(delta_p, base);
  SystemParams p = base;
  p.delta_p = delta_p;
  p.delta_ac = cpa.delta_ac;

  const BranchSolver solver(p, 0.0);
  const auto roots = solver.intracavity_roots(cpa.i_in);
  RatioResult r;
  r.i_in = cpa.i_in;
  r.delta_ac = cpa.delta_ac;
  r.i_c_cpa = cpa.i_c;
  r.n_branches = roots.size();
  if (roots.size() < 2) {
    std::ostringstream msg;
    msg << "monostable at delta_p=" << delta_p << ": only the CPA branch exists at i_in="
        << cpa.i_in;
    throw NoHighBranchError(msg.str());
  }

  const auto cpa_it = std::min_element(roots.begin(), roots.end(), [&](double a, double b) {
    return std::abs(a - cpa.i_c) < std::abs(b - cpa.i_c);
  });
  const auto drive = DriveConfig::from_intensity(cpa.i_in, 0.0);
  bool found = false;
  for (auto it = roots.begin(); it != roots.end(); ++it) {
    if (it == cpa_it) continue;
    const SteadyBranch b = make_branch(*it, drive, p);
    if (b.stability != Stability::stable) continue;
    const double ratio = std::norm(b.out_l) / cpa.i_in;
    if (!found || ratio > r.ratio) {
      r.ratio = ratio;
      r.i_c_high = b.i_c;
      found = true;
    }
  }
  if (!found) {
    throw NoHighBranchError("no stable branch coexists with the CPA branch");
  }
  return r;
}

AtomNumberFit fit_atom_number(const SystemParams& base, double delta_p,
                              const std::vector<RegionTarget>& targets) {
  if (targets.empty()) throw std::invalid_argument("fit_atom_number: no targets");
  std::vector<BistableRegion> unit;
  double sum = 0.0;
  for (const auto& t : targets) {
    SystemParams p = with_atom_number(base, 1.0);
    p.omega1 = t.omega1;
    const auto tp = cpa_turning_points(find_cpa_point_fast(delta_p, p), p);
    if (tp.regions.empty()) {
      std::ostringstream msg;
      msg << "fit_atom_number: no bistable region at omega1=" << t.omega1;
      throw NoHighBranchError(msg.str());
    }
    unit.push_back(tp.regions.front());
    sum += std::log(t.i_in_lower / unit.back().i_in_lower) +
           std::log(t.i_in_upper / unit.back().i_in_upper);
  }
  const double log_n = sum / (2.0 * static_cast<double>(targets.size()));
  AtomNumberFit fit;
  fit.n_atoms = std::exp(log_n);
  fit.g = with_atom_number(base, fit.n_atoms).g;
  double sq = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    BistableRegion r = unit[i];
    r.i_in_lower *= fit.n_atoms;
    r.i_in_upper *= fit.n_atoms;
    r.i_c_lower *= fit.n_atoms;
    r.i_c_upper *= fit.n_atoms;
    sq += std::pow(std::log(targets[i].i_in_lower / r.i_in_lower), 2) +
          std::pow(std::log(targets[i].i_in_upper / r.i_in_upper), 2);
    fit.regions.push_back(r);
  }
  fit.rms_log_error = std::sqrt(sq / (2.0 * static_cast<double>(targets.size())));
  return fit;
}

}  // namespace lcpa
