#include <doctest.h>

#include <cmath>
#include <random>

#include "lcpa/bloch.hpp"
#include "lcpa/cavity.hpp"
#include "lcpa/approx.hpp"

using namespace lcpa;

TEST_SUITE("approx") {

TEST_CASE("constants by direct arithmetic") {
  SystemParams p = default_params();
  p.delta_p = 6.0;
  p.delta_ac = -4.5;
  const auto c = approx_constants(p);
  CHECK(std::abs(c.x_const - cplx{1.0, -10.5}) < 1e-15);
  CHECK(std::abs(c.a_const - cplx{6.0, 0.001}) < 1e-15);
  CHECK(c.b_const == doctest::Approx(36.000001 + 0.004).epsilon(1e-15));
  // 1*(1e-6 + 36) + 8*0.001 + 4*(6e-6 + 144 + 3)
  CHECK(c.c_const == doctest::Approx(36.000001 + 0.008 + 4 * (6e-6 + 144.0 + 3.0)).epsilon(1e-15));

  p.delta_ac = p.delta_p;
  CHECK(approx_constants(p).x_const == cplx{1.0, 0.0});
  p.gamma12 = 0.0;
  const auto d = approx_constants(p);
  CHECK(d.a_const == cplx{6.0, 0.0});
  CHECK(d.b_const == 36.0);
}

TEST_CASE("reductions") {
  SystemParams p = default_params();
  p.delta_p = 2.0;
  p.omega1 = 0.0;
  const DriveConfig drive(0.7, 0.0);
  for (cplx a : {cplx{0.3, 0.1}, cplx{-2.0, 5.0}}) {
    CHECK(approx_fraction(a, p) == cplx{});
    CHECK(std::abs(approx_residual(a, drive, p) - (a * approx_constants(p).x_const - drive.source(p))) < 1e-12);
  }
  p.omega1 = 1.0;
  CHECK(approx_residual(0.0, drive, p) == -drive.source(p));
}

TEST_CASE("denominator stays positive") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    SystemParams p = default_params();
    p.omega1 = 0.01 + 5 * u(rng);
    p.gamma12 = 0.1 * u(rng);
    p.delta_p = 30 * u(rng) - 15;
    CHECK(approx_denominator(std::pow(10.0, 12 * u(rng) - 6), p) > 0.0);
    CHECK(approx_constants(p).b_const >= 0.0);
    CHECK(approx_constants(p).c_const >= 0.0);
  }
}

TEST_CASE("deviation report") {
  SystemParams p = default_params();
  p.delta_p = 6.0;
  p.delta_ac = -4.5;
  std::vector<double> grid;
  for (int i = 0; i <= 50; ++i) grid.push_back(std::pow(10.0, -8.0 + 10.0 * i / 50));
  const auto rows = deviation_report(p, grid);
  REQUIRE(rows.size() == grid.size());
  for (const auto& r : rows) {
    CHECK(r.i_in_exact > 0);
    if (!r.error) CHECK(std::isfinite(r.rel_deviation));
  }
  CHECK_THROWS(deviation_report(p, {}));

  // No atoms: both descriptions are the same empty cavity.
  p.g = 0.0;
  for (const auto& r : deviation_report(p, grid)) {
    REQUIRE_FALSE(r.error);
    CHECK(r.rel_deviation < 1e-12);
  }

  // No control field: the approximation is linear, and the exact medium is
  // optically pumped into the uncoupled |2>, so both reduce to the bare cavity.
  p = default_params();
  p.delta_p = 6.0;
  p.delta_ac = -4.5;
  p.omega1 = 0.0;
  const auto r0 = deviation_report(p, {1e-6, 1e-2, 1.0});
  for (const auto& r : r0) {
    REQUIRE_FALSE(r.error);
    const cplx x = approx_constants(p).x_const;
    CHECK(r.i_in_approx == doctest::Approx(r.i_c * std::norm(x) / source_gain(0.0, p)).epsilon(1e-9));
    CHECK(r.rel_deviation < 1e-9);
  }
}

}
