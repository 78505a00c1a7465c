#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcpa/density.hpp"
#include "lcpa/model.hpp"
#include "lcpa/params.hpp"

using namespace lcpa;

TEST_SUITE("core") {

TEST_CASE("figure parameter point validates unchanged") {
  const SystemParams p = default_params();
  const SystemParams v = validate_params(p);
  CHECK(v == p);
  CHECK(v.g * std::sqrt(v.n_atoms) == doctest::Approx(10.0));
  CHECK(v.kappa_l * v.tau == doctest::Approx(0.01));
}

TEST_CASE("validation names the offending field") {
  auto expect_field = [](SystemParams p, const std::string& field) {
    try {
      validate_params(p);
      FAIL("accepted invalid ", field);
    } catch (const ValidationError& e) {
      CHECK(e.field() == field);
    }
  };
  SystemParams p;
  p.gamma = -1;
  expect_field(p, "gamma");
  p = SystemParams{};
  p.tau = 0;
  expect_field(p, "tau");
  p = SystemParams{};
  p.kappa_r = 0;
  expect_field(p, "kappa_r");
  p = SystemParams{};
  p.gamma12 = -1e-3;
  expect_field(p, "gamma12");
  p = SystemParams{};
  p.omega1 = -1;
  expect_field(p, "omega1");
  p = SystemParams{};
  p.n_atoms = -1;
  expect_field(p, "n_atoms");
  p = SystemParams{};
  p.delta_p = std::nan("");
  expect_field(p, "delta_p");
}

TEST_CASE("validation is idempotent and preserves dimensionless ratios") {
  SystemParams p;
  p.gamma = 2.5;
  p.gamma12 = 0.01;
  p.kappa_l = 3.0;
  p.kappa_r = 1.5;
  p.tau = 0.04;
  p.g = 7.0;
  p.omega1 = 2.0;
  p.delta_p = -3.0;
  p.delta_ac = 1.0;
  p.delta1 = 0.5;
  const auto v = validate_params(p);
  CHECK(v.gamma == 1.0);
  CHECK(validate_params(v) == v);
  CHECK(v.g == doctest::Approx(p.g / p.gamma));
  CHECK(v.kappa_l * v.tau == doctest::Approx(p.kappa_l * p.tau));
  CHECK(v.delta_p / v.omega1 == doctest::Approx(p.delta_p / p.omega1));
}

TEST_CASE("atom-number split keeps the collective coupling") {
  const auto p = with_atom_number(default_params(), 1e5);
  CHECK(p.n_atoms == 1e5);
  CHECK(p.collective_g2() == doctest::Approx(100.0).epsilon(1e-14));
  CHECK_THROWS_AS(with_atom_number(default_params(), 0.0), ValidationError);
}

TEST_CASE("drive configuration") {
  const DriveConfig d(2.0, -std::numbers::pi / 2);
  CHECK(d.phase() == doctest::Approx(1.5 * std::numbers::pi));
  CHECK(d.intensity() == 4.0);
  CHECK(std::abs(d.in_left() - cplx{0.0, -2.0}) < 1e-15);
  CHECK(d.in_right() == cplx{2.0, 0.0});
  CHECK_THROWS_AS(DriveConfig(-1.0, 0.0), ValidationError);
  CHECK(reduce_phase(7 * std::numbers::pi) == doctest::Approx(std::numbers::pi));

  const auto p = default_params();
  CHECK(source_gain(0.0, p) == doctest::Approx(400.0));
  CHECK(source_gain(std::numbers::pi, p) < 1e-20);
  CHECK(std::norm(DriveConfig::from_intensity(3.0, 0.0).source(p)) == doctest::Approx(1200.0));
}

TEST_CASE("density matrix invariants") {
  DensityMatrix3 rho;
  CHECK(rho.population(1) == 1.0);
  CHECK_FALSE(rho.check());

  const auto mixed = DensityMatrix3::from_parts(0.5, 0.3, 0.2, {0.1, 0.05}, {0.0, 0.1}, {0.02, 0.0});
  CHECK_FALSE(mixed.check());
  CHECK(mixed(2, 1) == std::conj(mixed(1, 2)));
  CHECK(mixed.trace() == doctest::Approx(1.0));

  CHECK(DensityMatrix3::from_parts(0.6, 0.3, 0.2, 0, 0, 0).check());       // trace
  CHECK(DensityMatrix3::from_parts(1.2, -0.2, 0.0, 0, 0, 0).check());      // population bound
  CHECK(DensityMatrix3::from_parts(0.5, 0.5, 0.0, 0.6, 0, 0).check());     // coherence bound
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity() / 3.0;
  m(0, 1) = 0.1;
  CHECK(DensityMatrix3(m).check());                                        // Hermiticity
}

TEST_CASE("equations of motion conserve trace and Hermiticity") {
  auto p = default_params();
  p.delta_p = 1.3;
  p.delta1 = -0.4;
  const auto rho = DensityMatrix3::from_parts(0.5, 0.3, 0.2, {0.1, 0.05}, {0.03, 0.1}, {0.02, -0.04});
  const auto d = equations_of_motion(rho.matrix(), {0.3, -0.2}, {1.0, 2.0}, p);
  CHECK(std::abs(d.drho.trace()) < 1e-15);
  CHECK((d.drho - d.drho.adjoint()).norm() < 1e-15);
}

TEST_CASE("undriven ground state is a fixed point") {
  const auto p = default_params();
  CHECK(steady_residual(DensityMatrix3(), 0.0, 0.0, p) == 0.0);
}

TEST_CASE("atomic packing round trip") {
  const auto rho = DensityMatrix3::from_parts(0.5, 0.3, 0.2, {0.1, 0.05}, {0.03, 0.1}, {0.02, -0.04});
  CHECK((unpack_atomic(pack_atomic(rho.matrix())) - rho.matrix()).norm() == 0.0);
}

}
