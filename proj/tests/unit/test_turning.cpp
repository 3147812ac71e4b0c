#include <doctest.h>

#include "test_support.hpp"
#include "tunneltime/turning.hpp"

using namespace tunneltime;
using testing::kind_of;

TEST_CASE("quadratic roots reproduce the constant-charge table rows") {
  const auto kullie = turning_points_quadratic(1.375, -0.904, 0.04);
  CHECK(kullie.left == doctest::Approx(1.64).epsilon(0.01 / 1.64));
  CHECK(kullie.right == doctest::Approx(20.96).epsilon(0.01 / 20.96));
  const auto clementi = turning_points_quadratic(1.6875, -0.904, 0.11);
  CHECK(clementi.left == doctest::Approx(2.87).epsilon(0.01 / 2.87));
  CHECK(clementi.right == doctest::Approx(5.35).epsilon(0.01 / 5.35));
  // mpmath values for the Kullie pair
  CHECK(kullie.left == doctest::Approx(1.640031055950542).epsilon(1e-14));
  CHECK(kullie.right == doctest::Approx(20.959968944049458).epsilon(1e-14));
}

TEST_CASE("roots are zeros of V - E") {
  for (double z : {1.375, 1.6875}) {
    for (double f : {0.04, 0.07, 0.11}) {
      const auto tp = turning_points_quadratic(z, -0.904, f);
      const Barrier b = LaserCoulomb{f, ConstantZeff{z}};
      CHECK(std::abs(eval_potential(b, tp.left) + 0.904) <= kRootTol);
      CHECK(std::abs(eval_potential(b, tp.right) + 0.904) <= kRootTol);
      CHECK(tp.left < tp.right);
    }
  }
}

TEST_CASE("double root at zero discriminant") {
  const double e = -0.904, f = 0.04;
  const double z_crit = e * e / (4.0 * f);  // 5.1076
  CHECK(z_crit == doctest::Approx(5.1076).epsilon(1e-12));
  CHECK(kind_of([&] { turning_points_quadratic(z_crit, e, f); }) == ErrorKind::OverBarrier);
  CHECK(kind_of([&] { turning_points_quadratic(z_crit * 1.01, e, f); }) == ErrorKind::OverBarrier);
  const auto near = turning_points_quadratic(z_crit * (1.0 - 1e-12), e, f);
  CHECK(near.left == doctest::Approx(11.3).epsilon(1e-5));
  CHECK(near.right == doctest::Approx(11.3).epsilon(1e-5));
}

TEST_CASE("self-consistent SAE roots") {
  const auto low = turning_points_selfconsistent(LaserCoulomb{0.04, zeff_sae()}, -0.904);
  CHECK(low.left == doctest::Approx(1.24).epsilon(0.01 / 1.24));
  CHECK(low.right == doctest::Approx(21.43).epsilon(0.01 / 21.43));
  const auto high = turning_points_selfconsistent(LaserCoulomb{0.11, zeff_sae()}, -0.904);
  CHECK(high.left == doctest::Approx(1.39).epsilon(0.01 / 1.39));
  CHECK(high.right == doctest::Approx(6.90).epsilon(0.01 / 6.90));

  for (double f : {0.04, 0.07, 0.11}) {
    const Barrier b = LaserCoulomb{f, zeff_sae()};
    const auto tp = turning_points_selfconsistent(b, -0.904);
    CHECK(std::abs(eval_potential(b, tp.left) + 0.904) <= kRootTol);
    CHECK(std::abs(eval_potential(b, tp.right) + 0.904) <= kRootTol);
    // agrees with plain bisection
    const auto br = turning_points_bracketed(b, -0.904);
    CHECK(tp.left == doctest::Approx(br.left).epsilon(1e-12));
    CHECK(tp.right == doctest::Approx(br.right).epsilon(1e-12));
  }
}

TEST_CASE("over-barrier energies") {
  CHECK(kind_of([] { turning_points_selfconsistent(LaserCoulomb{0.3, zeff_sae()}, -0.904); }) ==
        ErrorKind::OverBarrier);
  CHECK(kind_of([] { make_problem(Rectangular{1.0, 2.0}, 1.5); }) == ErrorKind::OverBarrier);
  CHECK(kind_of([] { make_problem(LaserCoulomb{0.04, zeff_kullie()}, -0.2); }) == ErrorKind::OverBarrier);
  CHECK(kind_of([] { turning_points_selfconsistent(Rectangular{1.0, 2.0}, 0.5); }) == ErrorKind::DomainError);
}

TEST_CASE("bracketed solver") {
  SUBCASE("rectangular support edges") {
    const auto tp = turning_points_bracketed(Rectangular{1.0, 2.0}, 0.5);
    CHECK(tp.left == 0.0);
    CHECK(tp.right == 2.0);
  }
  SUBCASE("triangular ramp") {
    const auto tp = turning_points_bracketed(Triangular{1.0, 0.25, 4.0}, 0.5);
    CHECK(tp.left == 0.0);
    CHECK(tp.right == doctest::Approx(2.0).epsilon(1e-14));
  }
  SUBCASE("triangle whose base stays above E") {
    const auto tp = turning_points_bracketed(Triangular{1.0, 0.1, 2.0}, 0.5);
    CHECK(tp.right == 2.0);
  }
  SUBCASE("matches the quadratic for constant charges over the scan range") {
    for (int i = 0; i <= 7; ++i) {
      const double f = 0.04 + 0.01 * i;
      for (double z : {1.375, 1.6875}) {
        const auto q = turning_points_quadratic(z, -0.904, f);
        const auto b = turning_points_bracketed(LaserCoulomb{f, ConstantZeff{z}}, -0.904);
        CHECK(std::abs(q.left - b.left) < 1e-8);
        CHECK(std::abs(q.right - b.right) < 1e-8);
      }
    }
  }
  SUBCASE("tabulated bump") {
    std::vector<Sample> s;
    for (int i = 0; i <= 40; ++i) s.push_back({0.25 * i, 2.0 * std::exp(-(0.25 * i - 5.0) * (0.25 * i - 5.0) / 4.0)});
    const Tabulated tab(s);
    const auto tp = turning_points_bracketed(tab, 1.0);
    CHECK(std::abs(tab(tp.left) - 1.0) <= kRootTol);
    CHECK(std::abs(tab(tp.right) - 1.0) <= kRootTol);
    CHECK(tp.left < 5.0);
    CHECK(tp.right > 5.0);
  }
}

TEST_CASE("turning points move monotonically with field and energy") {
  for (const auto& zeff : {zeff_sae(), zeff_kullie(), zeff_clementi()}) {
    double prev_left = 0.0, prev_right = 1e300;
    for (int i = 0; i <= 14; ++i) {
      const double f = 0.04 + 0.005 * i;
      const auto tp = resolve_turning_points(LaserCoulomb{f, zeff}, -0.904);
      CHECK(tp.left > prev_left);
      CHECK(tp.right < prev_right);
      prev_left = tp.left;
      prev_right = tp.right;
    }
  }
  // lower E, wider forbidden region
  double prev_width = 1e300;
  for (int i = 0; i <= 10; ++i) {
    const double e = -1.2 + 0.05 * i;
    const auto tp = resolve_turning_points(LaserCoulomb{0.04, zeff_sae()}, e);
    CHECK(tp.right - tp.left <= prev_width);
    prev_width = tp.right - tp.left;
  }
}

TEST_CASE("make_problem validates its inputs") {
  CHECK(kind_of([] { make_problem(Rectangular{1.0, 2.0}, 0.5, 0.0); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { make_problem(Rectangular{-1.0, 2.0}, 0.5); }) == ErrorKind::DomainError);
  const auto p = make_problem(LaserCoulomb{0.04, zeff_sae()}, -0.904);
  CHECK(p.x_left < p.x_right);
  CHECK(p.mass == 1.0);
}
