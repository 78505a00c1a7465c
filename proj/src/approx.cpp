#include "lcpa/approx.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lcpa/cavity.hpp"

namespace lcpa {

namespace {
constexpr cplx I{0.0, 1.0};
}

ApproxConstants approx_constants(const SystemParams& p) {
  const double G = p.gamma, g12 = p.gamma12, dp = p.delta_p, om2 = p.omega1 * p.omega1;
  ApproxConstants c;
  c.x_const = p.kappa_mean() - I * (dp - p.delta_ac);
  c.a_const = G * (dp + I * g12);
  c.b_const = G * G * (g12 * g12 + dp * dp) + 4.0 * G * g12 * om2;
  c.c_const = G * G * G * (g12 * g12 + dp * dp) + 8.0 * G * G * g12 * om2 +
              4.0 * G * om2 * (6.0 * g12 * g12 + 4.0 * dp * dp + 3.0 * om2);
  return c;
}

double approx_denominator(double i_c, const SystemParams& p) {
  const auto c = approx_constants(p);
  const double G = p.gamma, g12 = p.gamma12, dp = p.delta_p, om2 = p.omega1 * p.omega1;
  const double dp2 = dp * dp;
  return G * om2 * (c.b_const + 4.0 * (g12 * g12 * dp2 + (dp2 - om2) * (dp2 - om2))) +
         p.g * p.g * i_c * (c.c_const + 8.0 * g12 * om2 * (dp2 + 6.0 * om2));
}

cplx approx_fraction(cplx alpha, const SystemParams& p) {
  const auto c = approx_constants(p);
  const double G = p.gamma, g12 = p.gamma12, dp = p.delta_p, om2 = p.omega1 * p.omega1;
  const double g = p.g;
  const double i_c = std::norm(alpha);
  const cplx num =
      2.0 * om2 * g * alpha *
      (2.0 * g * g * i_c * (c.a_const - 2.0 * g12 * dp) +
       c.a_const * (G * g12 + I * G * dp + 2.0 * I * g12 * dp - 2.0 * dp * dp + 2.0 * om2));
  const double den = approx_denominator(i_c, p);
  if (den == 0.0) throw ApproxDivisionError("approx_fraction: zero denominator");
  return num / den;
}

cplx approx_residual(cplx alpha, const DriveConfig& drive, const SystemParams& p) {
  const auto c = approx_constants(p);
  return alpha * (c.x_const - approx_fraction(alpha, p)) - drive.source(p);
}

std::vector<DeviationRow> deviation_report(const SystemParams& p, const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("deviation_report: empty grid");
  const auto c = approx_constants(p);
  const double gain = source_gain(0.0, p);
  std::vector<DeviationRow> rows;
  rows.reserve(grid.size());

  for (double i_c : grid) {
    DeviationRow row{i_c, 0.0, std::numeric_limits<double>::quiet_NaN(),
                     std::numeric_limits<double>::quiet_NaN(), std::nullopt};
    try {
      const cplx g_exact = total_response(i_c, p);
      row.i_in_exact = i_c * std::norm(g_exact) / gain;

      // F(alpha) = alpha H(|alpha|^2). With alpha = r e^{i theta} the relation
      // alpha (X - F) = S > 0 asks for q(theta) = e^{i theta}(X - r e^{i theta} H)
      // real and positive; then I_in = I_c q^2 / gain.
      const double r = std::sqrt(i_c);
      const cplx h = r > 0 ? approx_fraction(cplx{r, 0.0}, p) / r : cplx{};
      auto q = [&](double th) { return std::polar(1.0, th) * (c.x_const - r * std::polar(1.0, th) * h); };

      const double theta_exact = -std::arg(g_exact);
      constexpr int kScan = 1440;
      const double two_pi = 2.0 * std::numbers::pi;
      double best = std::numeric_limits<double>::quiet_NaN();
      double best_dist = std::numeric_limits<double>::infinity();
      double t0 = 0.0, f0 = q(0.0).imag();
      for (int k = 1; k <= kScan; ++k) {
        const double t1 = two_pi * k / kScan;
        const double f1 = q(t1).imag();
        if ((f0 < 0) != (f1 < 0) || f1 == 0.0) {
          double lo = t0, hi = t1, flo = f0;
          for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = q(mid).imag();
            if ((fm < 0) == (flo < 0)) {
              lo = mid;
              flo = fm;
            } else {
              hi = mid;
            }
          }
          const double th = 0.5 * (lo + hi);
          const cplx qv = q(th);
          if (qv.real() > 0) {
            const double d = std::abs(std::remainder(th - theta_exact, two_pi));
            if (d < best_dist) {
              best_dist = d;
              best = qv.real();
            }
          }
        }
        t0 = t1;
        f0 = f1;
      }
      if (std::isnan(best)) {
        row.error = "approximate relation has no positive-drive solution at this intensity";
      } else {
        row.i_in_approx = i_c * best * best / gain;
        row.rel_deviation = std::abs(row.i_in_approx - row.i_in_exact) / row.i_in_exact;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lcpa
