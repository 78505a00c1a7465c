#include "lcpa/turning_points.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lcpa {

namespace {

// Golden-section search for the extremum of sign * f(exp(u)) on [lo, hi].
double refine_extremum(double lo, double hi, double sign,
                       const std::function<double(double)>& f) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = std::log(lo), b = std::log(hi);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = sign * f(std::exp(c));
  double fd = sign * f(std::exp(d));
  for (int it = 0; it < 200 && b - a > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sign * f(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sign * f(std::exp(d));
    }
  }
  return std::exp(0.5 * (a + b));
}

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

TurningPoints find_turning_points(std::span<const double> i_c, std::span<const double> i_in,
                                  const std::function<double(double)>& input_of) {
  if (i_c.size() != i_in.size()) throw std::invalid_argument("find_turning_points: size mismatch");
  if (i_c.size() < 3) throw std::invalid_argument("find_turning_points: need at least 3 samples");

  TurningPoints out;
  int prev_sign = 0;
  std::size_t prev_index = 0;  // index of the left end of the last nonzero slope
  for (std::size_t k = 0; k + 1 < i_c.size(); ++k) {
    const int s = sign_of(i_in[k + 1] - i_in[k]);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      const bool is_max = prev_sign > 0;
      const double lo = i_c[prev_index];
      const double hi = i_c[k + 1];
      const double x = refine_extremum(lo, hi, is_max ? 1.0 : -1.0, input_of);
      out.folds.push_back({x, input_of(x), is_max});
    }
    prev_sign = s;
    prev_index = k;
  }

  std::size_t i = 0;
  while (i < out.folds.size()) {
    const Fold& f = out.folds[i];
    if (f.is_max && i + 1 < out.folds.size() && !out.folds[i + 1].is_max) {
      const Fold& g = out.folds[i + 1];
      BistableRegion r{g.i_in, f.i_in, g.i_c, f.i_c};
      r.degenerate = std::abs(f.i_in - g.i_in) <= kCuspTolerance * std::abs(f.i_in);
      out.regions.push_back(r);
      i += 2;
    } else {
      std::ostringstream msg;
      msg << "unpaired " << (f.is_max ? "maximum" : "minimum") << " fold at i_c=" << f.i_c
          << " (i_in=" << f.i_in << "); curve truncated at the sweep boundary";
      out.warning = msg.str();
      ++i;
    }
  }
  return out;
}

TurningPoints find_turning_points(const TransferCurve& curve) {
  std::vector<double> ic, in;
  ic.reserve(curve.samples.size());
  in.reserve(curve.samples.size());
  for (const auto& s : curve.samples) {
    ic.push_back(s.i_c);
    in.push_back(s.i_in);
  }
  const SystemParams p = curve.params;
  const double phase = curve.phase;
  return find_turning_points(ic, in, [&](double x) { return required_input_intensity(x, phase, p); });
}

}  // namespace lcpa
