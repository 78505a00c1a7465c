#include <doctest.h>

#include <cmath>
#include <random>

#include "lcpa/bloch.hpp"
#include "lcpa/model.hpp"
#include "oracles.hpp"

using namespace lcpa;

TEST_SUITE("bloch") {

TEST_CASE("no probe pumps everything into level 1") {
  const auto rho = steady_density(0.0, default_params());
  CHECK(std::abs(rho(1, 1) - 1.0) < 1e-14);
  CHECK((rho.matrix() - DensityMatrix3().matrix()).norm() < 1e-14);
}

TEST_CASE("matches the Liouvillian steady state built from H and jump operators") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    SystemParams p = default_params();
    p.gamma12 = 0.1 * u(rng);
    p.omega1 = 3.0 * u(rng);
    p.delta_p = 20.0 * u(rng) - 10.0;
    p.delta1 = 4.0 * u(rng) - 2.0;
    const cplx alpha = std::polar(std::pow(10.0, 4.0 * u(rng) - 3.0), 6.28 * u(rng));
    const auto rho = steady_density(alpha, p);
    const auto ref = oracle::liouvillian_steady_state(alpha, p);
    CHECK((rho.matrix() - ref).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(atomic_residual(rho, alpha, p) < 1e-10);
    CHECK_FALSE(rho.check());
  }
}

TEST_CASE("without control field the ground state |2> is dark") {
  // Half of the |3> decay feeds |2>, which nothing empties at omega1 = 0.
  SystemParams p = default_params();
  p.omega1 = 0.0;
  for (double dp : {-5.0, 0.0, 3.0}) {
    p.delta_p = dp;
    for (double a : {1e-2, 1.0, 50.0}) {
      const auto rho = steady_density(a, p);
      CHECK(std::abs(rho(2, 2) - 1.0) < 1e-10);
      CHECK(std::abs(rho(1, 3)) < 1e-10);
    }
  }
}

TEST_CASE("two-level saturation closed form agrees with an independent Liouvillian") {
  // Checks the oracle itself: a closed two-level atom (omega1 = 0 and decay
  // routed back to |1> only) is the H + jump-operator model with one channel.
  for (double dp : {-4.0, 0.0, 2.5}) {
    for (double a : {0.01, 0.3, 5.0}) {
      const auto t = oracle::two_level(a, dp, 1.0, 10.0);
      // Direct check of the two-level steady equations.
      const cplx i{0.0, 1.0};
      const cplx d13 = (i * dp - 0.5) * t.rho13 + i * 10.0 * a * (t.rho11 - t.rho33);
      const double d33 = -t.rho33 + (i * 10.0 * a * (std::conj(t.rho13) - t.rho13)).real();
      CHECK(std::abs(d13) < 1e-12);
      CHECK(std::abs(d33) < 1e-12);
    }
  }
}

TEST_CASE("EIT dark state: chi and rho33 vanish") {
  SystemParams p = default_params();
  p.gamma12 = 0.0;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 10; ++k) {
    const cplx alpha = std::polar(std::pow(10.0, 4.0 * u(rng) - 2.0), 6.28 * u(rng));
    const auto rho = steady_density(alpha, p);
    CHECK(std::abs(rho(3, 3)) < 1e-10);
    CHECK(std::abs(rho(1, 3)) < 1e-10);
    CHECK(std::abs(rho(2, 3)) < 1e-10);
    // |D> ~ omega1|1> - g alpha|2>
    const double n2 = p.omega1 * p.omega1 + p.g * p.g * std::norm(alpha);
    CHECK(std::abs(rho(1, 1) - p.omega1 * p.omega1 / n2) < 1e-10);
    CHECK(std::abs(effective_response(std::norm(alpha), p).chi) < 1e-10);
  }
}

TEST_CASE("gauge covariance") {
  SystemParams p = default_params();
  p.delta_p = 6.0;
  const double r = 0.37;
  const auto base = steady_density(r, p);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.14159, 3.14159);
  for (int k = 0; k < 20; ++k) {
    const double th = u(rng);
    const cplx ph = std::polar(1.0, th);
    const auto rot = steady_density(r * ph, p);
    CHECK(std::abs(rot(1, 2) - base(1, 2) * ph) < 1e-10);
    CHECK(std::abs(rot(1, 3) - base(1, 3) * ph) < 1e-10);
    CHECK(std::abs(rot(2, 3) - base(2, 3)) < 1e-10);
    for (int m = 1; m <= 3; ++m) CHECK(std::abs(rot(m, m) - base(m, m)) < 1e-10);
    const cplx chi_rot = -cplx{0, 1} * p.g * p.n_atoms * rot(1, 3) / (r * ph);
    CHECK(std::abs(chi_rot - effective_response(r * r, p).chi) < 1e-10);
  }
}

TEST_CASE("linear response closed form") {
  SystemParams p = default_params();
  p.delta1 = 0.3;
  for (double dp : {-6.0, -0.5, 0.0, 2.0, 6.0}) {
    p.delta_p = dp;
    const cplx i{0.0, 1.0};
    const cplx two = i * (dp - p.delta1) - p.gamma12;
    const cplx expected = -p.collective_g2() * two / ((i * dp - 0.5) * two + p.omega1 * p.omega1);
    CHECK(std::abs(linear_response(p) - expected) < 1e-12 * std::abs(expected) + 1e-14);
    const cplx small = effective_response(1e-8, p).chi;
    CHECK(std::abs(small - linear_response(p)) <= 1e-4 * std::abs(linear_response(p)));
  }
  p.omega1 = 0.0;
  p.delta_p = 2.0;
  CHECK(std::abs(linear_response(p) - 100.0 / cplx{0.5, -2.0}) < 1e-12);

  p = default_params();
  p.gamma12 = 0.0;
  CHECK(std::abs(linear_response(p)) == 0.0);
}

TEST_CASE("response saturates and stays passive") {
  SystemParams p = default_params();
  CHECK(std::abs(effective_response(1e6, p).chi) < 1e-2 * std::abs(effective_response(1.0, p).chi));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    p.delta_p = 30 * u(rng) - 15;
    p.omega1 = 4 * u(rng);
    p.gamma12 = 0.05 * u(rng);
    CHECK(effective_response(std::pow(10.0, 10 * u(rng) - 6), p).chi.real() >= -1e-12);
  }
  CHECK_THROWS_AS(effective_response(0.0, p), std::invalid_argument);
  CHECK(response_or_linear(0.0, p) == linear_response(p));
}

}
